#include "ltc/completion.hpp"

#include <algorithm>
#include <bit>

namespace ltc {

namespace {

std::optional<Violation> check_neighbourhoods(const SimpleGraph& g, const std::vector<Mask>& out,
                                              const std::vector<Mask>& in, const std::vector<int>& vertices) {
    for (int v : vertices) {
        for (int side = 0; side < 2; ++side) {
            Mask group = side == 0 ? out[v] : in[v];
            for (Mask m = group; m; m &= m - 1) {
                int a = std::countr_zero(m);
                Mask bad = group & ~closed_neighborhood(g, a) & ~(bit(a + 1) - 1);
                if (bad)
                    return Violation{v, a, std::countr_zero(bad), side == 0};
            }
        }
    }
    return std::nullopt;
}

struct Orientation {
    std::vector<Mask> out, in;
    explicit Orientation(int n) : out(static_cast<std::size_t>(n), 0), in(static_cast<std::size_t>(n), 0) {}
    void add(int u, int v) {
        out[u] |= bit(v);
        in[v] |= bit(u);
    }
};

// chosen[ic] is the adopted Gamma*-class for implication class ic, or -1 to use the least pair.
void orient_component(const GammaPartition& gp, const std::vector<int>& comp, std::vector<int> chosen,
                      Orientation& o) {
    const SimpleGraph& g = gp.graph();
    for (int u : comp)
        for (Mask m = g.neighbors(u) & ~(bit(u + 1) - 1); m; m &= m - 1) {
            int v = std::countr_zero(m);
            int ic = gp.implication_class_of({u, v});
            if (chosen[ic] < 0) {
                Edge least = gp.implication_members(ic).front();
                chosen[ic] = gp.class_of({least.first, least.second});
            }
            if (gp.class_of({u, v}) == chosen[ic])
                o.add(u, v);
            else
                o.add(v, u);
        }
}

std::vector<Mask> component_masks(const std::vector<std::vector<int>>& comps, int n) {
    std::vector<Mask> out(static_cast<std::size_t>(n), 0);
    for (const auto& c : comps) {
        Mask m = 0;
        for (int v : c)
            m |= bit(v);
        for (int v : c)
            out[v] = m;
    }
    return out;
}

} // namespace

std::optional<Violation> verify_local_tournament(const SimpleGraph& g, const std::vector<OrderedPair>& arcs) {
    int n = g.order();
    Orientation o(n);
    for (auto a : arcs) {
        if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n || a.tail == a.head || !g.adjacent(a.tail, a.head))
            throw std::invalid_argument("arc " + to_string(a) + " is not an edge");
        if ((o.out[a.tail] | o.in[a.tail]) & bit(a.head))
            throw std::invalid_argument("edge of arc " + to_string(a) + " oriented twice");
        o.add(a.tail, a.head);
    }
    if (static_cast<int>(arcs.size()) != g.size())
        throw std::invalid_argument("orientation leaves edges unoriented");
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        all[v] = v;
    return check_neighbourhoods(g, o.out, o.in, all);
}

CompletionResult complete(const PartialGraph& h, const GammaPartition& gp) {
    const SimpleGraph& g = gp.graph();
    int n = g.order();
    auto comps = connected_components(g);
    auto comp_of = component_masks(comps, n);
    auto arcs = h.arcs();

    std::vector<int> arc_choice(static_cast<std::size_t>(gp.implication_class_count()), -1);
    for (auto a : arcs) {
        int ic = gp.implication_class_of(make_edge(a.tail, a.head));
        if (arc_choice[ic] < 0)
            arc_choice[ic] = gp.class_of(a);
    }

    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& comp = comps[ci];
        Orientation trial(n);
        orient_component(gp, comp, std::vector<int>(arc_choice.size(), -1), trial);
        if (auto bad = check_neighbourhoods(g, trial.out, trial.in, comp))
            return NotOrientable{static_cast<int>(ci), *bad};

        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (!(comp_of[arcs[i].tail] & bit(comp.front())))
                continue;
            for (std::size_t j = i; j < arcs.size(); ++j)
                if (gp.class_of(arcs[i]) == gp.class_of(arcs[j].reversed()))
                    return Opposing{{arcs[i], arcs[j], *gamma_sequence(g, arcs[i], arcs[j].reversed())}};
        }
    }

    Orientation o(n);
    for (const auto& comp : comps)
        orient_component(gp, comp, arc_choice, o);
    Completed done;
    for (int u = 0; u < n; ++u)
        for (Mask m = o.out[u]; m; m &= m - 1)
            done.arcs.push_back({u, std::countr_zero(m)});
    return done;
}

CompletionResult complete(const PartialGraph& h) { return complete(h, GammaPartition(h.underlying())); }

bool is_lt_orientable(const SimpleGraph& g) { return is_completed(complete(PartialGraph(g, {}))); }

} // namespace ltc

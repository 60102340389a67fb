#include "ltc/search.hpp"
#include "ltc/completion.hpp"
#include "ltc/gamma.hpp"
#include "ltc/parallel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>

namespace ltc {

namespace {

// Partial orientation: every vertex's known out- and in-neighbours must be pairwise adjacent.
struct Orienter {
    const SimpleGraph& u;
    std::vector<Edge> todo;
    std::vector<Mask> out, in;

    bool clique(Mask m) const {
        for (Mask r = m; r; r &= r - 1) {
            int v = std::countr_zero(r);
            if ((m & ~bit(v)) & ~u.neighbors(v))
                return false;
        }
        return true;
    }

    bool place(int t, int h) {
        out[t] |= bit(h);
        in[h] |= bit(t);
        bool ok = clique(out[t]) && clique(in[h]);
        if (!ok) {
            out[t] &= ~bit(h);
            in[h] &= ~bit(t);
        }
        return ok;
    }

    void unplace(int t, int h) {
        out[t] &= ~bit(h);
        in[h] &= ~bit(t);
    }

    bool run(std::size_t i) {
        if (i == todo.size())
            return true;
        auto [a, b] = todo[i];
        for (auto [t, h] : {std::pair{a, b}, std::pair{b, a}})
            if (place(t, h)) {
                if (run(i + 1))
                    return true;
                unplace(t, h);
            }
        return false;
    }
};

} // namespace

bool brute_force_completable(const PartialGraph& h) {
    auto todo = h.plain().edges();
    if (static_cast<int>(todo.size()) > brute_force_max_edges)
        throw std::length_error("brute force supports at most " + std::to_string(brute_force_max_edges) +
                                " plain edges");
    SimpleGraph u = h.underlying();
    int n = h.order();
    Orienter o{u, todo, std::vector<Mask>(static_cast<std::size_t>(n)), std::vector<Mask>(static_cast<std::size_t>(n))};
    for (int v = 0; v < n; ++v)
        for (Mask m = h.out_arcs(v); m; m &= m - 1) {
            int w = std::countr_zero(m);
            o.out[v] |= bit(w);
            o.in[w] |= bit(v);
        }
    for (int v = 0; v < n; ++v)
        if (!o.clique(o.out[v]) || !o.clique(o.in[v]))
            return false;
    return o.run(0);
}

namespace {

std::vector<SimpleGraph> extend_by_vertex(const std::vector<SimpleGraph>& smaller, int n) {
    std::map<CanonicalForm, SimpleGraph> seen;
    for (const auto& g : smaller)
        for (Mask nbrs = 0; nbrs < bit(n - 1); ++nbrs) {
            SimpleGraph h(n, g.edges());
            for (Mask m = nbrs; m; m &= m - 1)
                h.add_edge(std::countr_zero(m), n - 1);
            auto c = canonical_form(h);
            seen.try_emplace(c, std::move(h));
        }
    std::vector<SimpleGraph> out;
    for (auto& [c, g] : seen)
        out.push_back(std::move(g));
    return out;
}

} // namespace

std::vector<SimpleGraph> graphs_up_to_iso(int n) {
    if (n < 0 || n > graph_generation_max_vertices)
        throw std::invalid_argument("graph generation supports 0.." + std::to_string(graph_generation_max_vertices) +
                                    " vertices");
    static std::mutex mutex;
    static std::vector<std::vector<SimpleGraph>> levels;
    std::lock_guard lock(mutex);
    if (levels.empty())
        levels.push_back({SimpleGraph(0)});
    while (static_cast<int>(levels.size()) <= n)
        levels.push_back(extend_by_vertex(levels.back(), static_cast<int>(levels.size())));
    return levels[n];
}

void validate(const EnumerationConfig& cfg) {
    if (cfg.n < 0)
        throw std::invalid_argument("n must be non-negative");
    if (cfg.max_arcs && *cfg.max_arcs != 0 && *cfg.max_arcs != 2)
        throw std::invalid_argument("max_arcs must be 0 or 2");
    int bound = cfg.max_arcs ? two_arc_max_vertices : unrestricted_max_vertices;
    if (cfg.n > bound)
        throw std::invalid_argument("n = " + std::to_string(cfg.n) + " exceeds the bound of " +
                                    std::to_string(bound) + " for this arc mode");
}

namespace {

// Calls visit(arcs) for every arc set on the edges of g allowed by max_arcs.
template <class Visit>
void for_each_arc_set(const SimpleGraph& g, std::optional<int> max_arcs, Visit&& visit) {
    auto edges = g.edges();
    std::vector<OrderedPair> arcs;
    if (!max_arcs) {
        std::size_t m = edges.size();
        std::vector<int> digit(m, 0);
        while (true) {
            arcs.clear();
            for (std::size_t i = 0; i < m; ++i)
                if (digit[i] == 1)
                    arcs.push_back({edges[i].first, edges[i].second});
                else if (digit[i] == 2)
                    arcs.push_back({edges[i].second, edges[i].first});
            visit(arcs);
            std::size_t i = 0;
            while (i < m && digit[i] == 2)
                digit[i++] = 0;
            if (i == m)
                return;
            ++digit[i];
        }
    }
    visit(arcs);
    if (*max_arcs == 0)
        return;
    std::vector<OrderedPair> oriented;
    for (auto [u, v] : edges) {
        oriented.push_back({u, v});
        oriented.push_back({v, u});
    }
    for (std::size_t i = 0; i < oriented.size(); ++i) {
        arcs = {oriented[i]};
        visit(arcs);
        for (std::size_t j = (i | 1) + 1; j < oriented.size(); ++j) {
            arcs = {oriented[i], oriented[j]};
            visit(arcs);
        }
    }
}

PartialGraph with_arcs(const SimpleGraph& g, const std::vector<OrderedPair>& arcs) {
    SimpleGraph plain = g;
    for (auto a : arcs)
        plain.remove_edge(a.tail, a.head);
    return PartialGraph(plain, arcs);
}

std::vector<SimpleGraph> underlying_graphs(const EnumerationConfig& cfg) {
    std::vector<SimpleGraph> out;
    for (auto& g : graphs_up_to_iso(cfg.n))
        if (!cfg.require_connected || is_connected(g))
            out.push_back(std::move(g));
    return out;
}

} // namespace

void enumerate_pogs(const EnumerationConfig& cfg, const std::function<void(const PartialGraph&)>& visit) {
    validate(cfg);
    for (const auto& g : underlying_graphs(cfg)) {
        // Distinct underlying classes never collide, so dedup per graph suffices.
        std::set<CanonicalForm> seen;
        for_each_arc_set(g, cfg.max_arcs, [&](const std::vector<OrderedPair>& arcs) {
            PartialGraph h = with_arcs(g, arcs);
            if (seen.insert(canonical_form(h)).second)
                visit(h);
        });
    }
}

std::vector<PartialGraph> enumerate_pogs(const EnumerationConfig& cfg) {
    std::vector<PartialGraph> out;
    enumerate_pogs(cfg, [&](const PartialGraph& h) { out.push_back(h); });
    return out;
}

namespace {

// Decides the obstruction conditions for every arc set on one underlying graph using
// class bitmasks. Exact: on an orientable graph a POG fails to complete iff two of its
// arcs (possibly equal) are opposing.
class ObstructionFilter {
public:
    explicit ObstructionFilter(const SimpleGraph& g) : gp_(g), orientable_(is_lt_orientable(g)) {
        int n = g.order();
        all_deletions_orientable_ = true;
        for (int v = 0; v < n; ++v) {
            SimpleGraph gv = delete_vertex(g, v);
            Deletion d{GammaPartition(gv), is_lt_orientable(gv)};
            all_deletions_orientable_ = all_deletions_orientable_ && d.orientable;
            deletions_.push_back(std::move(d));
        }
        if (gp_.class_count() > 64 || n > 16)
            throw std::length_error("filter supports at most 64 Gamma*-classes");
    }

    bool is_obstruction(const std::vector<OrderedPair>& arcs) const {
        if (!all_deletions_orientable_)
            return false;
        if (!orientable_)
            return arcs.empty();
        if (!opposing(gp_, arcs, -1, -1))
            return false;
        for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
            if (opposing(gp_, arcs, i, -1))
                return false;
        for (int v = 0; v < gp_.graph().order(); ++v)
            if (opposing(deletions_[v].gp, arcs, -1, v))
                return false;
        return true;
    }

private:
    struct Deletion {
        GammaPartition gp;
        bool orientable;
    };

    // Whether the arcs other than arcs[skip] and those touching `deleted` contain an opposing pair.
    static bool opposing(const GammaPartition& gp, const std::vector<OrderedPair>& arcs, int skip, int deleted) {
        std::uint64_t mine = 0, reversed = 0;
        for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
            if (i == skip)
                continue;
            OrderedPair a = arcs[i];
            if (deleted >= 0) {
                if (a.tail == deleted || a.head == deleted)
                    continue;
                a = {a.tail - (a.tail > deleted), a.head - (a.head > deleted)};
            }
            int c = gp.class_of_index(gp.pair_index(a));
            mine |= std::uint64_t{1} << c;
            reversed |= std::uint64_t{1} << gp.reverse_class(c);
        }
        return (mine & reversed) != 0;
    }

    GammaPartition gp_;
    bool orientable_;
    bool all_deletions_orientable_;
    std::vector<Deletion> deletions_;
};

} // namespace

std::vector<PartialGraph> minimal_obstructions(int n, bool two_arc, int threads) {
    EnumerationConfig cfg{n, two_arc ? std::optional<int>(2) : std::nullopt, false};
    validate(cfg);
    auto graphs = underlying_graphs(cfg);
    std::vector<std::map<CanonicalForm, PartialGraph>> found(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t gi) {
        const SimpleGraph& g = graphs[gi];
        ObstructionFilter filter(g);
        for_each_arc_set(g, cfg.max_arcs, [&](const std::vector<OrderedPair>& arcs) {
            if (!filter.is_obstruction(arcs))
                return;
            PartialGraph h = with_arcs(g, arcs);
            found[gi].try_emplace(canonical_form(h), h);
        });
        for (const auto& [c, h] : found[gi])
            if (!certify_obstruction(h))
                throw std::logic_error("search filter and certifier disagree on:\n" + serialize_pog(h));
    });
    std::map<CanonicalForm, PartialGraph> all;
    for (auto& part : found)
        all.merge(part);
    std::vector<PartialGraph> out;
    for (auto& [c, h] : all)
        out.push_back(std::move(h));
    return out;
}

ComparisonReport compare_with_catalog(int n, const std::vector<CatalogEntry>& catalog, bool two_arc, int threads) {
    ComparisonReport report;
    report.n = n;
    auto found = minimal_obstructions(n, two_arc, threads);
    report.found = static_cast<int>(found.size());
    std::set<CanonicalForm> listed, searched;
    for (const auto& e : catalog)
        if (e.pog.order() == n)
            listed.insert(e.canonical);
    for (const auto& h : found) {
        auto c = canonical_form(h);
        searched.insert(c);
        if (!listed.count(c))
            report.missing.push_back(h);
    }
    for (const auto& e : catalog)
        if (e.pog.order() == n && !searched.count(e.canonical))
            report.extra.push_back(e);
    return report;
}

} // namespace ltc

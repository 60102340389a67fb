#include "ltc/interval.hpp"

#include <algorithm>
#include <bit>

namespace ltc {

std::optional<UmbrellaViolation> check_umbrella(const SimpleGraph& g, const StraightOrder& order) {
    int n = g.order();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order is not a permutation of the vertices");
    Mask seen = 0;
    for (int v : order) {
        if (v < 0 || v >= n || (seen >> v) & 1U)
            throw std::invalid_argument("order is not a permutation of the vertices");
        seen |= bit(v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int u = order[i], v = order[j], w = order[k];
                if (g.adjacent(u, w) && !(g.adjacent(u, v) && g.adjacent(v, w)))
                    return UmbrellaViolation{u, v, w};
            }
    return std::nullopt;
}

namespace {

// LexBFS over a connected vertex set; with prior, ties go to the vertex latest in prior.
std::vector<int> lex_bfs(const SimpleGraph& g, const std::vector<int>& comp, const std::vector<int>* prior) {
    int n = g.order();
    int k = static_cast<int>(comp.size());
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    if (prior)
        for (int i = 0; i < k; ++i)
            rank[(*prior)[i]] = i;
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
    Mask left = 0;
    for (int v : comp)
        left |= bit(v);
    std::vector<int> out;
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (Mask m = left; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (pick < 0 || label[v] > label[pick] || (label[v] == label[pick] && prior && rank[v] > rank[pick]))
                pick = v;
        }
        out.push_back(pick);
        left &= ~bit(pick);
        for (Mask m = g.neighbors(pick) & left; m; m &= m - 1)
            label[std::countr_zero(m)].push_back(k - step);
    }
    return out;
}

struct OrderSearch {
    const SimpleGraph& g;
    Mask todo;
    std::vector<int> placed;

    // Every placed vertex with a neighbour still to come must be adjacent to all
    // vertices placed after it, and triples among placed vertices must be umbrellas.
    bool consistent() const {
        int p = static_cast<int>(placed.size());
        int w = placed.back();
        for (int i = 0; i + 1 < p; ++i) {
            int u = placed[i];
            if (!g.adjacent(u, w))
                continue;
            for (int j = i + 1; j + 1 < p; ++j)
                if (!g.adjacent(u, placed[j]) || !g.adjacent(placed[j], w))
                    return false;
        }
        Mask left = todo;
        for (int i = 0; i < p; ++i) {
            int u = placed[i];
            if (!(g.neighbors(u) & left))
                continue;
            for (int j = i + 1; j < p; ++j)
                if (!g.adjacent(u, placed[j]))
                    return false;
        }
        return true;
    }

    bool run() {
        if (!todo)
            return true;
        for (Mask m = todo; m; m &= m - 1) {
            int v = std::countr_zero(m);
            placed.push_back(v);
            todo &= ~bit(v);
            if (consistent() && run())
                return true;
            todo |= bit(v);
            placed.pop_back();
        }
        return false;
    }
};

bool umbrella_ok(const SimpleGraph& g, const std::vector<int>& seq) {
    int k = static_cast<int>(seq.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                if (g.adjacent(seq[i], seq[l]) && !(g.adjacent(seq[i], seq[j]) && g.adjacent(seq[j], seq[l])))
                    return false;
    return true;
}

std::optional<std::vector<int>> order_component(const SimpleGraph& g, const std::vector<int>& comp) {
    auto s1 = lex_bfs(g, comp, nullptr);
    auto s2 = lex_bfs(g, comp, &s1);
    auto s3 = lex_bfs(g, comp, &s2);
    for (const auto* s : {&s3, &s2, &s1})
        if (umbrella_ok(g, *s))
            return *s;
    if (static_cast<int>(comp.size()) > straight_search_limit)
        return std::nullopt;
    Mask todo = 0;
    for (int v : comp)
        todo |= bit(v);
    OrderSearch search{g, todo, {}};
    if (search.run())
        return search.placed;
    return std::nullopt;
}

} // namespace

std::optional<StraightOrder> straight_enumeration(const SimpleGraph& g) {
    StraightOrder order;
    for (const auto& comp : connected_components(g)) {
        auto part = order_component(g, comp);
        if (!part)
            return std::nullopt;
        order.insert(order.end(), part->begin(), part->end());
    }
    if (check_umbrella(g, order))
        throw std::logic_error("straight_enumeration produced a non-straight order");
    return order;
}

std::string to_string(ForbiddenKind kind) {
    switch (kind) {
    case ForbiddenKind::cycle_plus_k1:
        return "cycle_plus_k1";
    case ForbiddenKind::tent_plus_k1:
        return "tent_plus_k1";
    case ForbiddenKind::comp_even_cycle:
        return "comp_even_cycle";
    case ForbiddenKind::comp_odd_cycle_plus_k1:
        return "comp_odd_cycle_plus_k1";
    case ForbiddenKind::tucker_fig1:
        return "tucker_fig1";
    }
    return "?";
}

std::optional<ForbiddenKind> forbidden_kind_from_string(const std::string& name) {
    for (auto k : {ForbiddenKind::cycle_plus_k1, ForbiddenKind::tent_plus_k1, ForbiddenKind::comp_even_cycle,
                   ForbiddenKind::comp_odd_cycle_plus_k1, ForbiddenKind::tucker_fig1})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

namespace {

SimpleGraph cycle(int len, int extra_isolated) {
    SimpleGraph g(len + extra_isolated);
    for (int i = 0; i < len; ++i)
        g.add_edge(i, (i + 1) % len);
    return g;
}

// Vertices a..g numbered 0..6 as they appear in the drawings.
const std::array<std::vector<Edge>, 5> tucker_drawings = {{
    {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}},
    {{0, 2}, {1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {4, 5}, {5, 6}},
    {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}, {1, 6}, {4, 6}},
    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 5}, {5, 6}},
    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}},
}};

const std::array<int, 5> tucker_orders = {6, 7, 7, 7, 7};

} // namespace

SimpleGraph forbidden_family(ForbiddenKind kind, int k) {
    switch (kind) {
    case ForbiddenKind::cycle_plus_k1:
        if (k < 4)
            throw std::invalid_argument("cycle_plus_k1 needs k >= 4");
        return cycle(k, 1);
    case ForbiddenKind::tent_plus_k1: {
        SimpleGraph g(7, tucker_drawings[0]);
        return g;
    }
    case ForbiddenKind::comp_even_cycle:
        if (k < 3)
            throw std::invalid_argument("comp_even_cycle needs k >= 3");
        return cycle(2 * k, 0);
    case ForbiddenKind::comp_odd_cycle_plus_k1:
        if (k < 1)
            throw std::invalid_argument("comp_odd_cycle_plus_k1 needs k >= 1");
        return cycle(2 * k + 1, 1);
    case ForbiddenKind::tucker_fig1:
        if (k < 1 || k > 5)
            throw std::invalid_argument("tucker_fig1 index must be 1..5");
        return SimpleGraph(tucker_orders[k - 1], tucker_drawings[k - 1]);
    }
    throw std::invalid_argument("unknown forbidden family");
}

TuckerVerdict tucker_oracle(const SimpleGraph& g) {
    int n = g.order();
    if (n > tucker_max_vertices)
        throw std::length_error("tucker_oracle supports at most " + std::to_string(tucker_max_vertices) + " vertices");
    SimpleGraph co = complement(g);

    auto search = [&](const SimpleGraph& host, ForbiddenKind kind, int k) -> std::optional<TuckerVerdict> {
        SimpleGraph pattern = forbidden_family(kind, k);
        if (pattern.order() > n)
            return std::nullopt;
        auto phi = contains(host, pattern);
        if (!phi)
            return std::nullopt;
        std::vector<int> verts = *phi;
        std::sort(verts.begin(), verts.end());
        return TuckerVerdict{false, TuckerWitness{kind, k, verts}};
    };

    for (int k = 4; k + 1 <= n; ++k)
        if (auto v = search(g, ForbiddenKind::cycle_plus_k1, k))
            return *v;
    if (auto v = search(g, ForbiddenKind::tent_plus_k1, 0))
        return *v;
    for (int k = 3; 2 * k <= n; ++k)
        if (auto v = search(co, ForbiddenKind::comp_even_cycle, k))
            return *v;
    for (int k = 1; 2 * k + 2 <= n; ++k)
        if (auto v = search(co, ForbiddenKind::comp_odd_cycle_plus_k1, k))
            return *v;
    for (int i = 1; i <= 5; ++i)
        if (auto v = search(co, ForbiddenKind::tucker_fig1, i))
            return *v;
    return TuckerVerdict{};
}

std::optional<int> arc_balancing_vertex(const PartialGraph& h, OrderedPair arc) {
    if (arc.tail < 0 || arc.head < 0 || arc.tail >= h.order() || arc.head >= h.order() ||
        !h.has_arc(arc.tail, arc.head))
        throw std::invalid_argument(to_string(arc) + " is not an arc");
    SimpleGraph u = h.underlying();
    Mask exactly_one = (u.neighbors(arc.tail) ^ u.neighbors(arc.head)) & ~bit(arc.tail) & ~bit(arc.head);
    if (std::popcount(exactly_one) != 1)
        return std::nullopt;
    return std::countr_zero(exactly_one);
}

CutVertexKind classify_cut_vertex(const PartialGraph& h, const StraightOrder& order, int v) {
    SimpleGraph u = h.underlying();
    auto cuts = cut_vertices(u);
    if (std::find(cuts.begin(), cuts.end(), v) == cuts.end())
        throw std::invalid_argument(std::to_string(v) + " is not a cut-vertex");
    auto arcs = h.arcs();
    if (arcs.size() != 2)
        throw std::invalid_argument("exactly two arcs required");
    if (check_umbrella(u, order))
        throw std::invalid_argument("order is not a straight enumeration");
    std::vector<int> pos(static_cast<std::size_t>(h.order()));
    for (int i = 0; i < h.order(); ++i)
        pos[order[i]] = i;
    auto before = [&](OrderedPair a) { return pos[a.tail] < pos[v] || pos[a.head] < pos[v]; };
    auto after = [&](OrderedPair a) { return pos[a.tail] > pos[v] || pos[a.head] > pos[v]; };
    bool dividing = (before(arcs[0]) && after(arcs[1])) || (before(arcs[1]) && after(arcs[0]));
    return dividing ? CutVertexKind::dividing : CutVertexKind::non_dividing;
}

} // namespace ltc

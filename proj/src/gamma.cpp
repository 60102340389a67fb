#include "ltc/gamma.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ltc {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

void require_pair(const SimpleGraph& g, OrderedPair p) {
    if (p.tail < 0 || p.head < 0 || p.tail >= g.order() || p.head >= g.order() || p.tail == p.head ||
        !g.adjacent(p.tail, p.head))
        throw std::invalid_argument(to_string(p) + " is not in Z(G)");
}

// Pairs forced by p under Gamma, excluding p itself.
template <class F>
void for_each_gamma_neighbour(const SimpleGraph& g, OrderedPair p, F&& f) {
    int u = p.tail, v = p.head;
    // (u,v) Gamma (x,u) when x is a neighbour of u not adjacent to v.
    for (Mask m = g.neighbors(u) & ~closed_neighborhood(g, v); m; m &= m - 1)
        f(OrderedPair{std::countr_zero(m), u});
    // (u,v) Gamma (v,y) when y is a neighbour of v not adjacent to u.
    for (Mask m = g.neighbors(v) & ~closed_neighborhood(g, u); m; m &= m - 1)
        f(OrderedPair{v, std::countr_zero(m)});
}

} // namespace

GammaPartition::GammaPartition(const SimpleGraph& g)
    : g_(g), index_(static_cast<std::size_t>(g.order() * g.order()), -1) {
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (Mask m = g.neighbors(u); m; m &= m - 1) {
            int v = std::countr_zero(m);
            index_[u * n + v] = static_cast<int>(pairs_.size());
            pairs_.push_back({u, v});
        }

    int z = static_cast<int>(pairs_.size());
    UnionFind uf(z);
    for (int i = 0; i < z; ++i)
        for_each_gamma_neighbour(g, pairs_[i], [&](OrderedPair q) { uf.unite(i, pair_index(q)); });

    // Roots are the least index of each component, so numbering by first occurrence
    // orders classes by their least pair.
    std::vector<int> id(static_cast<std::size_t>(z), -1);
    class_.resize(static_cast<std::size_t>(z));
    for (int i = 0; i < z; ++i) {
        int r = uf.find(i);
        if (id[r] < 0) {
            id[r] = static_cast<int>(classes_.size());
            classes_.emplace_back();
        }
        class_[i] = id[r];
        classes_[id[r]].push_back(pairs_[i]);
    }

    reverse_.resize(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c)
        reverse_[c] = class_[pair_index(classes_[c].front().reversed())];

    implication_of_class_.assign(classes_.size(), -1);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        if (implication_of_class_[c] >= 0)
            continue;
        int ic = static_cast<int>(implication_.size());
        implication_of_class_[c] = ic;
        implication_of_class_[reverse_[c]] = ic;
        implication_.emplace_back();
    }
    for (auto [u, v] : g.edges())
        implication_[implication_of_class_[class_[pair_index({u, v})]]].push_back({u, v});
}

int GammaPartition::class_of(OrderedPair p) const {
    require_pair(g_, p);
    return class_[pair_index(p)];
}

int GammaPartition::implication_class_of(Edge e) const {
    return implication_of_class_[class_of({e.first, e.second})];
}

bool gamma_step(OrderedPair p, OrderedPair q, const SimpleGraph& g) {
    require_pair(g, p);
    require_pair(g, q);
    int u = p.tail, v = p.head, x = q.tail, y = q.head;
    if (u == x && v == y)
        return true;
    if (u == y && v != x && !g.adjacent(v, x))
        return true;
    if (v == x && u != y && !g.adjacent(u, y))
        return true;
    return false;
}

bool is_balanced_edge(const SimpleGraph& g, Edge e) {
    require_pair(g, {e.first, e.second});
    return closed_neighborhood(g, e.first) == closed_neighborhood(g, e.second);
}

std::optional<std::vector<OrderedPair>> gamma_sequence(const SimpleGraph& g, OrderedPair from, OrderedPair to) {
    require_pair(g, from);
    require_pair(g, to);
    int n = g.order();
    auto key = [n](OrderedPair p) { return p.tail * n + p.head; };
    std::vector<int> prev(static_cast<std::size_t>(n * n), -2);
    std::vector<OrderedPair> queue{from};
    prev[key(from)] = -1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        OrderedPair p = queue[i];
        if (p == to)
            break;
        // Visit successors in lexicographic order for a deterministic shortest path.
        std::vector<OrderedPair> next;
        for_each_gamma_neighbour(g, p, [&](OrderedPair q) { next.push_back(q); });
        std::sort(next.begin(), next.end());
        for (auto q : next)
            if (prev[key(q)] == -2) {
                prev[key(q)] = key(p);
                queue.push_back(q);
            }
    }
    if (prev[key(to)] == -2)
        return std::nullopt;
    std::vector<OrderedPair> path;
    for (int k = key(to); k != -1; k = prev[k])
        path.push_back({k / n, k % n});
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<OpposingWitness> opposing_witness(const PartialGraph& h, const GammaPartition& gp) {
    auto arcs = h.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i; j < arcs.size(); ++j)
            if (gp.class_of(arcs[i]) == gp.class_of(arcs[j].reversed())) {
                auto seq = gamma_sequence(gp.graph(), arcs[i], arcs[j].reversed());
                return OpposingWitness{arcs[i], arcs[j], *seq};
            }
    return std::nullopt;
}

std::optional<OpposingWitness> opposing_witness(const PartialGraph& h) {
    return opposing_witness(h, GammaPartition(h.underlying()));
}

} // namespace ltc

#pragma once

// Independent oracles and generators shared by the test binaries. Nothing here calls
// the Gamma engine, the completion code or the canonical form under test.

#include "ltc/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace ltc::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234ULL);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline SimpleGraph random_graph(int n, double p) {
    std::bernoulli_distribution coin(p);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng()))
                g.add_edge(u, v);
    return g;
}

// Each edge of g independently becomes an arc (random direction) with probability p_arc.
inline PartialGraph random_pog(const SimpleGraph& g, double p_arc) {
    std::bernoulli_distribution coin(p_arc), flip(0.5);
    SimpleGraph plain(g.order());
    std::vector<OrderedPair> arcs;
    for (auto [u, v] : g.edges()) {
        if (coin(rng()))
            arcs.push_back(flip(rng()) ? OrderedPair{u, v} : OrderedPair{v, u});
        else
            plain.add_edge(u, v);
    }
    return PartialGraph(plain, arcs);
}

inline std::vector<int> random_permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng());
    return p;
}

// Every labelled graph on n vertices (n <= 6).
inline std::vector<SimpleGraph> all_labelled_graphs(int n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.push_back({u, v});
    std::vector<SimpleGraph> out;
    for (std::uint32_t m = 0; m < (1U << slots.size()); ++m) {
        SimpleGraph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((m >> i) & 1U)
                g.add_edge(slots[i].first, slots[i].second);
        out.push_back(g);
    }
    return out;
}

// Relation code of the pair (a,b): 0 none, 1 edge, 2 arc a->b, 3 arc b->a.
inline int relation_code(const PartialGraph& h, int a, int b) {
    if (h.has_edge(a, b))
        return 1;
    if (h.has_arc(a, b))
        return 2;
    if (h.has_arc(b, a))
        return 3;
    return 0;
}

// Lexicographically smallest relabelled adjacency code over all n! permutations.
inline std::vector<int> permutation_canonical(const PartialGraph& h) {
    int n = h.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::vector<int>> best;
    do {
        // perm[i] is the original vertex placed at position i.
        std::vector<int> code;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                code.push_back(relation_code(h, perm[i], perm[j]));
        if (!best || code < *best)
            best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    best->insert(best->begin(), n);
    return *best;
}

// Straight from the definition of Gamma.
inline bool gamma_definition(const SimpleGraph& g, OrderedPair p, OrderedPair q) {
    auto [u, v] = p;
    auto [x, y] = q;
    return (u == x && v == y) || (u == y && v != x && !g.adjacent(v, x)) || (v == x && u != y && !g.adjacent(u, y));
}

inline std::vector<OrderedPair> ordered_pairs(const SimpleGraph& g) {
    std::vector<OrderedPair> z;
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (u != v && g.adjacent(u, v))
                z.push_back({u, v});
    return z;
}

// Class id of every pair of Z(G) (indexed like ordered_pairs) by BFS over all pair pairs.
inline std::vector<int> closure_classes(const SimpleGraph& g) {
    auto z = ordered_pairs(g);
    std::vector<int> cls(z.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < z.size(); ++s) {
        if (cls[s] >= 0)
            continue;
        std::queue<std::size_t> todo;
        todo.push(s);
        cls[s] = next;
        while (!todo.empty()) {
            std::size_t i = todo.front();
            todo.pop();
            for (std::size_t j = 0; j < z.size(); ++j)
                if (cls[j] < 0 && (gamma_definition(g, z[i], z[j]) || gamma_definition(g, z[j], z[i]))) {
                    cls[j] = next;
                    todo.push(j);
                }
        }
        ++next;
    }
    return cls;
}

// Shortest Gamma-sequence length (number of pairs) by plain BFS; 0 if unrelated.
inline int shortest_sequence_length(const SimpleGraph& g, OrderedPair from, OrderedPair to) {
    auto z = ordered_pairs(g);
    auto idx = [&](OrderedPair p) { return static_cast<std::size_t>(std::find(z.begin(), z.end(), p) - z.begin()); };
    std::vector<int> dist(z.size(), 0);
    std::queue<std::size_t> todo;
    dist[idx(from)] = 1;
    todo.push(idx(from));
    while (!todo.empty()) {
        std::size_t i = todo.front();
        todo.pop();
        for (std::size_t j = 0; j < z.size(); ++j)
            if (!dist[j] && gamma_definition(g, z[i], z[j])) {
                dist[j] = dist[i] + 1;
                todo.push(j);
            }
    }
    return dist[idx(to)];
}

// Local tournament check written directly from the definition.
inline bool is_local_tournament(const SimpleGraph& g, const std::vector<OrderedPair>& arcs) {
    int n = g.order();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));
    for (auto a : arcs) {
        out[a.tail].push_back(a.head);
        in[a.head].push_back(a.tail);
    }
    for (int v = 0; v < n; ++v)
        for (const auto* side : {&out[v], &in[v]})
            for (std::size_t i = 0; i < side->size(); ++i)
                for (std::size_t j = i + 1; j < side->size(); ++j)
                    if (!g.adjacent((*side)[i], (*side)[j]))
                        return false;
    return true;
}

// Tries all 2^m orientations of the plain edges (m <= 20).
inline bool orientation_exists(const PartialGraph& h) {
    auto plain = h.plain().edges();
    SimpleGraph u = h.underlying();
    auto fixed = h.arcs();
    for (std::uint32_t m = 0; m < (1U << plain.size()); ++m) {
        auto arcs = fixed;
        for (std::size_t i = 0; i < plain.size(); ++i) {
            auto [a, b] = plain[i];
            arcs.push_back((m >> i) & 1U ? OrderedPair{b, a} : OrderedPair{a, b});
        }
        if (is_local_tournament(u, arcs))
            return true;
    }
    return false;
}

// Umbrella property checked over every triple of positions.
inline bool umbrella_holds(const SimpleGraph& g, const std::vector<int>& order) {
    int n = static_cast<int>(order.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (g.adjacent(order[i], order[k]) &&
                    !(g.adjacent(order[i], order[j]) && g.adjacent(order[j], order[k])))
                    return false;
    return true;
}

// Whether some permutation of the vertices satisfies the umbrella property.
inline bool straight_order_exists(const SimpleGraph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (umbrella_holds(g, perm))
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Components by repeated DFS.
inline int component_count(const SimpleGraph& g, Mask alive) {
    int count = 0;
    Mask seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (!((alive >> s) & 1U) || ((seen >> s) & 1U))
            continue;
        ++count;
        std::vector<int> stack{s};
        seen |= bit(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < g.order(); ++w)
                if (((alive >> w) & 1U) && !((seen >> w) & 1U) && g.adjacent(v, w)) {
                    seen |= bit(w);
                    stack.push_back(w);
                }
        }
    }
    return count;
}

inline bool is_cut_vertex(const SimpleGraph& g, int v) {
    Mask all = g.order() == 64 ? ~Mask{0} : bit(g.order()) - 1;
    return component_count(g, all & ~bit(v)) > component_count(g, all);
}

} // namespace ltc::test

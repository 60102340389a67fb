#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ltc {

using Mask = std::uint64_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }

// Ordered vertex pair; used both for arcs (tail, head) and for elements of Z(G).
struct OrderedPair {
    int tail = 0;
    int head = 0;

    OrderedPair reversed() const { return {head, tail}; }
    auto operator<=>(const OrderedPair&) const = default;
};

// Unordered pair stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class SimpleGraph {
public:
    static constexpr int max_vertices = 63;

    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int size() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    Mask neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;

    // Sorted (u < v, lexicographic).
    std::vector<Edge> edges() const;

    bool operator==(const SimpleGraph&) const = default;

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    std::vector<Mask> adj_;
};

// H = (V, E u A): plain edges plus arcs on pairwise distinct vertex pairs.
class PartialGraph {
public:
    PartialGraph() = default;
    explicit PartialGraph(int n);
    PartialGraph(SimpleGraph plain, const std::vector<OrderedPair>& arcs);
    PartialGraph(int n, const std::vector<Edge>& edges, const std::vector<OrderedPair>& arcs);

    int order() const { return plain_.order(); }

    // Throws std::invalid_argument if the pair is already used.
    void add_edge(int u, int v);
    void add_arc(int tail, int head);
    void remove_arc(int tail, int head);
    void relax_arc(int tail, int head);

    bool has_edge(int u, int v) const { return plain_.adjacent(u, v); }
    bool has_arc(int tail, int head) const { return (out_[tail] >> head) & 1U; }
    bool linked(int u, int v) const { return has_edge(u, v) || has_arc(u, v) || has_arc(v, u); }

    Mask out_arcs(int v) const { return out_[v]; }
    Mask in_arcs(int v) const;

    const SimpleGraph& plain() const { return plain_; }
    SimpleGraph underlying() const;

    // Sorted lexicographically.
    std::vector<OrderedPair> arcs() const;
    int arc_count() const;

    bool operator==(const PartialGraph&) const = default;

private:
    SimpleGraph plain_;
    std::vector<Mask> out_;
};

PartialGraph parse_pog(std::string_view text);
std::string serialize_pog(const PartialGraph& h);

SimpleGraph complement(const SimpleGraph& g);
std::vector<int> cut_vertices(const SimpleGraph& g);
// Components ordered by smallest vertex; vertices ascending within each.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
Mask closed_neighborhood(const SimpleGraph& g, int v);

// Vertices of the result are numbered in the order given.
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vertices);
PartialGraph induced_subgraph(const PartialGraph& h, const std::vector<int>& vertices);
SimpleGraph delete_vertex(const SimpleGraph& g, int v);
PartialGraph delete_vertex(const PartialGraph& h, int v);

// perm[v] is the new id of v.
PartialGraph relabel(const PartialGraph& h, const std::vector<int>& perm);

PartialGraph dual(const PartialGraph& h);

// Induced containment: arcs may relax to edges but are never reversed.
// Returns phi with phi[pattern vertex] = host vertex.
std::optional<std::vector<int>> contains(const PartialGraph& host, const PartialGraph& pattern);
std::optional<std::vector<int>> contains(const SimpleGraph& host, const SimpleGraph& pattern);

struct CanonicalForm {
    std::string signature;

    std::string hex() const;
    static CanonicalForm from_hex(std::string_view hex);
    auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int canonical_max_vertices = 16;

// Throws std::length_error above canonical_max_vertices.
CanonicalForm canonical_form(const PartialGraph& h);
CanonicalForm canonical_form(const SimpleGraph& g);

std::string export_dot(const PartialGraph& h, std::string_view name = "H");

std::string to_string(const OrderedPair& p);

} // namespace ltc

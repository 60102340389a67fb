#pragma once

#include "ltc/graph.hpp"

#include <optional>
#include <vector>

namespace ltc {

// The Gamma*-classes of Z(G) and the implication classes of E(G).
class GammaPartition {
public:
    explicit GammaPartition(const SimpleGraph& g);

    const SimpleGraph& graph() const { return g_; }

    // Z(G) in lexicographic order.
    const std::vector<OrderedPair>& pairs() const { return pairs_; }
    // -1 if uv is not an edge.
    int pair_index(OrderedPair p) const { return index_[p.tail * g_.order() + p.head]; }

    int class_count() const { return static_cast<int>(classes_.size()); }
    // Throws std::invalid_argument if p is not in Z(G).
    int class_of(OrderedPair p) const;
    int class_of_index(int pair_idx) const { return class_[pair_idx]; }
    // Classes are ordered by their lexicographically least pair; members sorted.
    const std::vector<OrderedPair>& members(int cls) const { return classes_[cls]; }
    // The class formed by reversing every pair of cls.
    int reverse_class(int cls) const { return reverse_[cls]; }

    bool related(OrderedPair p, OrderedPair q) const { return class_of(p) == class_of(q); }

    int implication_class_count() const { return static_cast<int>(implication_.size()); }
    int implication_class_of(Edge e) const;
    // Edges of each implication class, sorted; classes ordered by least edge.
    const std::vector<Edge>& implication_members(int ic) const { return implication_[ic]; }

private:
    SimpleGraph g_;
    std::vector<OrderedPair> pairs_;
    std::vector<int> index_;
    std::vector<int> class_;
    std::vector<std::vector<OrderedPair>> classes_;
    std::vector<int> reverse_;
    std::vector<int> implication_of_class_;
    std::vector<std::vector<Edge>> implication_;
};

// (u,v) Gamma (x,y). Throws std::invalid_argument if either pair is not in Z(g).
bool gamma_step(OrderedPair p, OrderedPair q, const SimpleGraph& g);

inline GammaPartition gamma_partition(const SimpleGraph& g) { return GammaPartition(g); }

// Throws std::invalid_argument if e is not an edge.
bool is_balanced_edge(const SimpleGraph& g, Edge e);

// Shortest Gamma-sequence from -> to, inclusive; nullopt if in different classes.
std::optional<std::vector<OrderedPair>> gamma_sequence(const SimpleGraph& g, OrderedPair from, OrderedPair to);

struct OpposingWitness {
    OrderedPair first;
    OrderedPair second;
    // Shortest Gamma-sequence from first to second reversed.
    std::vector<OrderedPair> sequence;
};

// First opposing pair (a,b),(c,d) with (a,b) <= (c,d) in arc order; an arc may oppose itself.
std::optional<OpposingWitness> opposing_witness(const PartialGraph& h);
std::optional<OpposingWitness> opposing_witness(const PartialGraph& h, const GammaPartition& gp);

} // namespace ltc

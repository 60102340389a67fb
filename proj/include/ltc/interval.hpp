#pragma once

#include "ltc/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ltc {

// order[i] is the vertex at position i.
using StraightOrder = std::vector<int>;

struct UmbrellaViolation {
    int u, v, w;  // u before v before w, uw an edge, uv or vw missing
    auto operator<=>(const UmbrellaViolation&) const = default;
};

// First violating triple in lexicographic position order. Throws if order is not a permutation.
std::optional<UmbrellaViolation> check_umbrella(const SimpleGraph& g, const StraightOrder& order);

// Components are laid out one after another, each ordered by repeated LexBFS sweeps;
// a component the sweeps fail on is searched exhaustively when it has at most
// straight_search_limit vertices.
inline constexpr int straight_search_limit = 10;
std::optional<StraightOrder> straight_enumeration(const SimpleGraph& g);

enum class ForbiddenKind { cycle_plus_k1, tent_plus_k1, comp_even_cycle, comp_odd_cycle_plus_k1, tucker_fig1 };

std::string to_string(ForbiddenKind kind);
std::optional<ForbiddenKind> forbidden_kind_from_string(const std::string& name);

// cycle_plus_k1 and tent_plus_k1 are searched in G itself; the comp_* kinds and
// tucker_fig1 are the patterns searched in the complement of G.
// Throws std::invalid_argument for an out-of-range parameter (k is ignored for tent_plus_k1).
SimpleGraph forbidden_family(ForbiddenKind kind, int k = 0);

struct TuckerWitness {
    ForbiddenKind family;
    int k = 0;
    std::vector<int> vertices;  // sorted
};

struct TuckerVerdict {
    bool is_pca = true;
    std::optional<TuckerWitness> witness;
};

inline constexpr int tucker_max_vertices = 12;
// Throws std::length_error above tucker_max_vertices.
TuckerVerdict tucker_oracle(const SimpleGraph& g);

// The unique vertex outside the arc adjacent (in U(h)) to exactly one endpoint.
// Throws std::invalid_argument if arc is not an arc of h.
std::optional<int> arc_balancing_vertex(const PartialGraph& h, OrderedPair arc);

enum class CutVertexKind { dividing, non_dividing };

// Throws std::invalid_argument unless v is a cut-vertex of U(h), h has exactly two arcs
// and order is a straight enumeration of U(h).
CutVertexKind classify_cut_vertex(const PartialGraph& h, const StraightOrder& order, int v);

} // namespace ltc

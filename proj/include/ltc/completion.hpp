#pragma once

#include "ltc/gamma.hpp"
#include "ltc/graph.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace ltc {

// Two in-neighbours (or two out-neighbours) of vertex that are not adjacent.
struct Violation {
    int vertex = 0;
    int first = 0;
    int second = 0;
    bool out_neighbours = false;

    auto operator<=>(const Violation&) const = default;
};

struct Completed {
    std::vector<OrderedPair> arcs;  // sorted
};

struct NotOrientable {
    int component = 0;  // index into connected_components(U(h))
    Violation violation;
};

struct Opposing {
    OpposingWitness witness;
};

using CompletionResult = std::variant<Completed, NotOrientable, Opposing>;

inline bool is_completed(const CompletionResult& r) { return std::holds_alternative<Completed>(r); }

// Throws std::invalid_argument unless arcs orient every edge of g exactly once.
std::optional<Violation> verify_local_tournament(const SimpleGraph& g, const std::vector<OrderedPair>& arcs);

CompletionResult complete(const PartialGraph& h);
CompletionResult complete(const PartialGraph& h, const GammaPartition& gp);

bool is_lt_orientable(const SimpleGraph& g);

} // namespace ltc

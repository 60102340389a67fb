#pragma once

#include "ltc/catalog.hpp"
#include "ltc/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ltc {

inline constexpr int brute_force_max_edges = 24;

// Tries every orientation of the plain edges (with partial-orientation pruning).
// Shares no code with the Gamma machinery. Throws std::length_error above
// brute_force_max_edges plain edges.
bool brute_force_completable(const PartialGraph& h);

// All graphs on n vertices up to isomorphism, ordered by canonical form.
inline constexpr int graph_generation_max_vertices = 8;
std::vector<SimpleGraph> graphs_up_to_iso(int n);

inline constexpr int unrestricted_max_vertices = 6;
inline constexpr int two_arc_max_vertices = 8;

struct EnumerationConfig {
    int n = 0;
    // 0 or 2 arcs at most; nullopt means any number of arcs.
    std::optional<int> max_arcs;
    bool require_connected = false;
};

// Throws std::invalid_argument if cfg exceeds the bounds above.
void validate(const EnumerationConfig& cfg);

// Every matching PartialGraph exactly once up to isomorphism.
void enumerate_pogs(const EnumerationConfig& cfg, const std::function<void(const PartialGraph&)>& visit);
std::vector<PartialGraph> enumerate_pogs(const EnumerationConfig& cfg);

// All obstructions on exactly n vertices up to isomorphism, ordered by canonical form.
// two_arc restricts candidates to at most two arcs (n <= two_arc_max_vertices);
// otherwise n <= unrestricted_max_vertices.
std::vector<PartialGraph> minimal_obstructions(int n, bool two_arc = false, int threads = 1);

struct ComparisonReport {
    int n = 0;
    int found = 0;                           // obstructions found by the search
    std::vector<PartialGraph> missing;       // found by search, absent from catalog
    std::vector<CatalogEntry> extra;         // catalog entries on n vertices the search did not find
    bool ok() const { return missing.empty() && extra.empty(); }
};

ComparisonReport compare_with_catalog(int n, const std::vector<CatalogEntry>& catalog, bool two_arc = false,
                                      int threads = 1);

} // namespace ltc

#pragma once

#include "ltc/completion.hpp"
#include "ltc/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ltc {

struct ObstructionCertificate {
    CompletionResult not_completable;        // NotOrientable or Opposing
    std::vector<Completed> vertex_deletions;  // index v: completion of x - v
    std::vector<Completed> arc_relaxations;   // index i: completion with arcs()[i] relaxed
    int arc_count = 0;
    // Whether the witness sequence touches every vertex; informational.
    bool all_vertices_in_sequence = false;
};

std::optional<ObstructionCertificate> certify_obstruction(const PartialGraph& x);


struct CatalogMatch {
    std::string family;
    std::vector<int> params;
    std::string figure_ref;
    bool is_dual = false;
};

std::string to_string(const CatalogMatch& m);  // e.g. "dual of div_i(1) [fig2(i)]"

struct CatalogEntry {
    std::string family;
    std::vector<int> params;
    std::string figure_ref;
    bool is_dual = false;
    PartialGraph pog;
    CanonicalForm canonical;
    // Later-generated instances isomorphic to pog.
    std::vector<CatalogMatch> aliases;
};

struct FamilyInfo {
    std::string name;
    std::string figure_ref;
    std::vector<std::string> param_names;
};

const std::vector<FamilyInfo>& families();

// Throws std::invalid_argument for an unknown family or parameters outside the legal range.
PartialGraph generate_family(const std::string& family, const std::vector<int>& params);

// Every legal parameter tuple of the family whose instance has at most max_n vertices.
std::vector<std::vector<int>> family_parameters(const std::string& family, int max_n);

// Drawable parameter tuples rejected by generate_family because the drawing fails
// certification, and the builder that still produces them.
std::vector<std::vector<int>> excluded_parameters(const std::string& family, int max_n);
PartialGraph generate_candidate(const std::string& family, const std::vector<int>& params);

class CertificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All families over all legal parameters plus duals, one entry per isomorphism class
// (the first generated instance wins). Throws CertificationFailure if an instance does
// not certify. threads <= 0 means hardware concurrency.
std::vector<CatalogEntry> enumerate_catalog(int max_n, int threads = 1);

// Greedy: delete vertices in ascending id order, then relax arcs in ascending order,
// keeping each step only if the result stays non-completable.
std::optional<PartialGraph> extract_obstruction(const PartialGraph& h);


// Every (family, params, dual) instance with at most max_n vertices isomorphic to x,
// including instances that coincide with an earlier catalog entry.
std::vector<CatalogMatch> match_catalog(const PartialGraph& x, int max_n);
// Match against a loaded catalog (entries are compared by canonical form only).
std::vector<CatalogMatch> match_catalog(const PartialGraph& x, const std::vector<CatalogEntry>& catalog);

std::string catalog_to_json(const std::vector<CatalogEntry>& catalog);
// Throws std::runtime_error on malformed input.
std::vector<CatalogEntry> catalog_from_json(const std::string& text);

} // namespace ltc

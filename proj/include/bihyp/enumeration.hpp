#ifndef BIHYP_ENUMERATION_HPP
#define BIHYP_ENUMERATION_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bihyp/canonical.hpp"
#include "bihyp/hypergraph.hpp"

namespace bihyp {

class VerdictStore;

// Raised by run_sweep when budget_ms elapses before the walk finishes.
struct SweepTimeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepFilters {
    int min_degree = 0;
    bool all_pairs_adjacent = false;
    bool connected = false;
};

enum class SweepPredicate { Colorable, MinimalUncolorable };

struct SweepSpec {
    int n = 0;
    int r = 3;
    int min_edges = 0;
    int max_edges = 0;
    SweepFilters filters;
    SweepPredicate predicate = SweepPredicate::Colorable;
    int shard_depth = 3;  // augmentation tree depth where subtrees are split off
    int jobs = 1;         // <= 0 picks the hardware count
    long long budget_ms = 0;  // 0 = unbounded
    std::string id;       // store key; derived from the parameters when empty
};

std::string default_sweep_id(const SweepSpec& spec);

// Isomorph-free generation of r-uniform edge sets on n labeled vertices via
// orderly augmentation: extend by edges above the current colex maximum and
// keep exactly the children equal to their own canonical form. Every
// isomorphism class with min_edges <= |E| <= max_edges is visited once.
void enumerate_bihypergraphs(
    int n, int r, int min_edges, int max_edges,
    const std::function<void(const BiHypergraph&, const CanonicalForm&)>& fn);

struct SweepSummary {
    SweepSpec spec;
    std::string id;
    long long classes = 0;  // isomorphism classes enumerated in range
    std::vector<long long> classes_by_edge_count;  // index = edge count
    long long filtered = 0;    // classes that passed the filters
    long long violations = 0;  // filtered classes failing the predicate
    std::vector<CanonicalForm> counterexamples;
    long long elapsed_ms = 0;
};

// Enumerates, filters, evaluates the predicate on every surviving class, and
// (when a store is given) records one verdict per evaluated class plus the
// sweep metadata. Counts are independent of jobs and shard_depth.
SweepSummary run_sweep(const SweepSpec& spec, VerdictStore* store = nullptr);

std::string summary_to_json(const SweepSummary& s);

}  // namespace bihyp

#endif

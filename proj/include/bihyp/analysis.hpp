#ifndef BIHYP_ANALYSIS_HPP
#define BIHYP_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihyp/hypergraph.hpp"
#include "bihyp/solver.hpp"

namespace bihyp {

// Comparisons against real-valued thresholds use this slack; measured values
// are integers and thresholds are irrational, so ties cannot occur.
inline constexpr double kEpsilon = 1e-9;

struct BoundReport {
    std::string bound;
    double threshold = 0.0;
    double measured = 0.0;
    bool satisfied = false;
    std::string conclusion;  // one-sided: never "uncolorable"
};

// Satisfied when |E| < (r-1)^(r-1); then the instance is colorable.
BoundReport lll_size_bound(const BiHypergraph& h);

// Satisfied when r >= 4 and every edge meets fewer than (r-1)^(r-1)/e - 1
// other edges; then the instance is colorable with at most r-1 colors.
BoundReport lll_incidence_bound(const BiHypergraph& h);

// Satisfied when every degree is at most ((r-1)^(r-1)/e - 2) / r; then the
// instance is colorable with at most r-1 colors.
BoundReport degree_bound(const BiHypergraph& h);

std::vector<BoundReport> all_bounds(const BiHypergraph& h);

// Minimum-degree vertex with its degree. For an r-uniform instance with m
// edges the degree is at most floor(r*m/n) by counting incidences.
std::pair<int, int> handshake_min_degree(const MixedHypergraph& h);

struct PartitionWitness {
    std::optional<Coloring> coloring;
    std::string violation;  // set when coloring is absent
};

// Colors each part with its own color when every part is independent and
// every edge of C u D meets fewer than |e| parts; otherwise reports which
// condition failed. Covers the few-parts and singleton-part shortcuts, whose
// cover condition holds automatically.
PartitionWitness partition_witness(const MixedHypergraph& h,
                                   const std::vector<std::vector<int>>& parts);

// For r-uniform h on exactly 2r vertices (r >= 3): scans complementary
// r-subset pairs in lexicographic order and 2-colors the first pair with
// neither half an edge. Absent only when every pair is hit, which forces
// |E| >= C(2r, r) / 2.
std::optional<Coloring> complement_pair_witness(const BiHypergraph& h);

struct IdentifyResult {
    MixedHypergraph h;       // quotient with u, v merged
    std::vector<int> image;  // original vertex -> quotient vertex
    int merged = 0;          // quotient index shared by u and v
    int dropped_edges = 0;   // supersets removed to restore Sperner families
};

// Identification H.uv for non-adjacent u, v: rewrites edges through the merge
// and re-Spernerizes by dropping supersets (safe: a proper coloring of a
// subset edge is proper for its superset on both the C and D side).
IdentifyResult identify(const MixedHypergraph& h, int u, int v);

// Pulls a proper coloring of the quotient back through the image map; the
// result is proper for the original instance.
Coloring lift_coloring(const IdentifyResult& r, const Coloring& c);

// Smallest (u, v) with no common edge, if any.
std::optional<std::pair<int, int>> find_nonadjacent_pair(const MixedHypergraph& h);

// Order-reduction step: true when n >= floor(r*m/(n+1)) * (r-1) + 1, i.e.
// colorability of every r-uniform bi-hypergraph of order n with m edges
// extends to order n+1.
bool reduction_applies(long long n, long long r, long long m);

struct MinimalityReport {
    bool minimal_uncolorable = false;
    Verdict base;
    // One entry per edge: the verdict for h - e (witness present iff colorable).
    std::vector<std::pair<Edge, Verdict>> deletions;
};

// Uncolorable and every single-edge deletion colorable; deletions are solved
// on a small work pool (jobs <= 0 picks the hardware count).
MinimalityReport is_minimal_uncolorable(const BiHypergraph& h, int jobs = 1);

// First 5-subset (lexicographic) carrying all ten of its triples, for
// 3-uniform instances.
std::optional<std::vector<int>> contains_k533(const BiHypergraph& h);

// Connected and still connected after deleting any single edge, on the vertex
// graph where two vertices are adjacent when they share an edge of C u D.
bool is_two_edge_connected(const MixedHypergraph& h);

}  // namespace bihyp

#endif

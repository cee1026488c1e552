#ifndef BIHYP_SOLVER_HPP
#define BIHYP_SOLVER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bihyp/hypergraph.hpp"

namespace bihyp {

enum class Status { Colorable, Uncolorable };

std::string to_string(Status s);

struct Verdict {
    Status status = Status::Uncolorable;
    std::optional<Coloring> witness;  // present iff colorable
    long long nodes_explored = 0;
    long long elapsed_ms = 0;
};

struct SolveOptions {
    // Upper bound on the number of colors; -1 means no cap beyond n.
    int max_colors = -1;
};

// Backtracking decision with first-occurrence symmetry breaking, vertices in
// descending-degree order (ties by index) and bit-set candidate filtering.
// Any returned witness is re-checked against is_proper before returning.
Verdict decide_colorable(const MixedHypergraph& h, const SolveOptions& opts = {});

// Streams every normalized proper coloring with at most max_colors colors
// (max_colors <= 0 means n) in lexicographic order of the normalized label
// vectors. Return false from the callback to stop early.
void for_each_proper_coloring(const MixedHypergraph& h, int max_colors,
                              const std::function<bool(const Coloring&)>& fn);

std::vector<Coloring> enumerate_proper_colorings(const MixedHypergraph& h,
                                                 int max_colors = -1);

struct ChiBar {
    std::optional<int> value;         // absent iff uncolorable
    std::optional<Coloring> witness;  // attains value when present
    long long nodes_explored = 0;
    long long elapsed_ms = 0;
};

// Upper chromatic number: searches k = n, n-1, ... for a proper coloring
// using exactly k colors and returns the first success.
ChiBar upper_chromatic_number(const MixedHypergraph& h);

// Independent reference decision: walks every set partition of V (restricted
// growth strings) and checks is_proper outright. Shares no search code with
// decide_colorable. Refuses n > 12.
Verdict brute_force_oracle(const MixedHypergraph& h);

}  // namespace bihyp

#endif

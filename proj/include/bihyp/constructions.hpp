#ifndef BIHYP_CONSTRUCTIONS_HPP
#define BIHYP_CONSTRUCTIONS_HPP

#include <map>
#include <string>

#include "bihyp/hypergraph.hpp"

namespace bihyp {

// K(n, l, m): C = all l-subsets of [n], D = all m-subsets.
MixedHypergraph make_knlm(int n, int l, int m);

// Chain bi-hypergraph on 3k vertices in blocks V_i = {v_{i,1}, v_{i,2}, v_{i,3}}
// (k >= 2, 7k-6 edges): for each consecutive block pair q, q+1 the two block
// triples plus the six edges {v_{q+1,j}, v_{q,j}, v_{q,j+t}} for j in [3],
// t in {1,2}, where slot indices 4 and 5 wrap to 1 and 2.
BiHypergraph make_hk(int k);

// Vertex index of v_{i,j}, blocks and slots 1-based, slots 4 and 5 wrapping.
int chain_vertex(int i, int j);

// The seven-point plane with seven 3-element lines: every point lies on three
// lines and any two lines meet in exactly one point.
BiHypergraph make_fano();

// Minimal uncolorable 3-uniform bi-hypergraph of order n (n >= 6), built by
// chain surgery keyed on n mod 6. Sizes follow 14k + c for n = 6k + residue.
BiHypergraph make_muc(int n);

// Family name of the construction make_muc dispatches to for this order.
std::string muc_family_name(int n);

struct ConstructionSpec {
    // knlm | hk | fano | muc-even | muc-odd | muc-plus1 | muc-plus4 |
    // muc-plus2 | muc-plus5
    std::string family;
    int n = 0;
    int l = 0;
    int m = 0;
    int k = 0;
};

MixedHypergraph build(const ConstructionSpec& spec);

// Family plus parameters, recorded into generated files.
struct Provenance {
    std::string family;
    std::map<std::string, long long> params;
    bool operator==(const Provenance&) const = default;
};

Provenance provenance_of(const ConstructionSpec& spec);

}  // namespace bihyp

#endif

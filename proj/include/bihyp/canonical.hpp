#ifndef BIHYP_CANONICAL_HPP
#define BIHYP_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bihyp/hypergraph.hpp"

namespace bihyp {

// Edges are ordered colex: compare descending vertex sequences
// lexicographically. Under this order every edge on vertices <= d precedes
// every edge containing a vertex > d, which makes partial relabelings true
// prefixes of the final list.
bool colex_less(const Edge& a, const Edge& b);

struct CanonicalForm {
    int n = 0;
    std::vector<Edge> edges;  // colex-sorted, minimal over all relabelings
    std::uint64_t hash = 0;   // FNV-1a over n and the edge list

    bool operator==(const CanonicalForm& o) const {
        return n == o.n && edges == o.edges;
    }
};

std::uint64_t canonical_hash(int n, const std::vector<Edge>& edges);
std::string hash_hex(std::uint64_t h);

// Exact search over vertex relabelings with prefix pruning; refuses n > 12.
// Equal forms exactly characterize isomorphism.
CanonicalForm canonical_form(const BiHypergraph& h);

bool are_isomorphic(const BiHypergraph& a, const BiHypergraph& b);

}  // namespace bihyp

#endif

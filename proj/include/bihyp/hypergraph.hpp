#ifndef BIHYP_HYPERGRAPH_HPP
#define BIHYP_HYPERGRAPH_HPP

#include <optional>
#include <vector>

#include "bihyp/bitset.hpp"

namespace bihyp {

// An edge is a nonempty set of vertex indices, stored sorted ascending.
using Edge = std::vector<int>;

// A vertex partition given as a label vector, normalized so labels appear in
// first-occurrence order 0, 1, 2, ... when scanning vertices upward.
struct Coloring {
    std::vector<int> colors;
    int num_colors = 0;

    Coloring() = default;
    // Normalizes arbitrary labels; the partition is what matters.
    static Coloring from_labels(const std::vector<int>& labels);

    bool operator==(const Coloring&) const = default;
};

// A co-edge is properly colored when some color repeats: |f(e)| < |e|.
bool is_properly_colored_c(const Edge& e, const Coloring& c);
// An edge (D side) is properly colored when it is not monochromatic: |f(e)| > 1.
bool is_properly_colored_d(const Edge& e, const Coloring& c);

// One entry per distinct vertex set of C u D; an edge lying in both families
// appears once with both flags set.
struct EdgeMember {
    Edge verts;
    Bitset mask;
    bool in_c = false;
    bool in_d = false;
};

// Mixed hypergraph H = (V, C, D) on vertices 0..n-1. Both families are kept
// Sperner and duplicate-free; edges and families are stored in canonical
// sorted order, so structural equality is plain comparison.
class MixedHypergraph {
public:
    MixedHypergraph() = default;
    MixedHypergraph(int n, std::vector<Edge> c_edges, std::vector<Edge> d_edges);

    static MixedHypergraph bi(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& c_edges() const { return c_edges_; }
    const std::vector<Edge>& d_edges() const { return d_edges_; }

    const std::vector<EdgeMember>& members() const { return members_; }
    const std::vector<int>& incident_members(int v) const;

    // Number of distinct edges of C u D through v (a bi-edge counts once).
    int degree(int v) const;
    // Sorted vertices sharing an edge with v, excluding v itself.
    std::vector<int> neighborhood(int v) const;
    // True when no edge of C u D is entirely contained in s.
    bool is_independent(const std::vector<int>& s) const;

    bool is_bi() const { return c_edges_ == d_edges_; }
    // Common edge size of C u D, or absent when sizes differ or no edges.
    std::optional<int> uniformity() const;

    bool operator==(const MixedHypergraph& o) const {
        return n_ == o.n_ && c_edges_ == o.c_edges_ && d_edges_ == o.d_edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> c_edges_;
    std::vector<Edge> d_edges_;
    std::vector<EdgeMember> members_;
    std::vector<std::vector<int>> incidence_;

    void build_index();
};

bool is_proper(const MixedHypergraph& h, const Coloring& c);

// Removes e from every family that contains it; throws when e is absent.
MixedHypergraph delete_edge(const MixedHypergraph& h, const Edge& e);

struct InducedSubgraph {
    MixedHypergraph h;
    std::vector<int> original_of;  // new index -> original index, ascending
};
// Sub-hypergraph on s: keeps exactly the edges contained in s, reindexed by
// the order-preserving map recorded in original_of.
InducedSubgraph induced(const MixedHypergraph& h, const std::vector<int>& s);

// Bi-hypergraph: C = D, exposed as a single family E.
class BiHypergraph {
public:
    BiHypergraph() = default;
    BiHypergraph(int n, std::vector<Edge> edges)
        : h_(MixedHypergraph::bi(n, std::move(edges))) {}
    explicit BiHypergraph(MixedHypergraph h);

    int n() const { return h_.n(); }
    const std::vector<Edge>& edges() const { return h_.c_edges(); }
    int size() const { return static_cast<int>(edges().size()); }
    const MixedHypergraph& mixed() const { return h_; }
    operator const MixedHypergraph&() const { return h_; }

    bool operator==(const BiHypergraph& o) const { return h_ == o.h_; }

private:
    MixedHypergraph h_;
};

}  // namespace bihyp

#endif

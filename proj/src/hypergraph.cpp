#include "bihyp/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bihyp {

Coloring Coloring::from_labels(const std::vector<int>& labels) {
    Coloring c;
    c.colors.reserve(labels.size());
    std::vector<std::pair<int, int>> seen;  // (label, normalized id)
    for (int lab : labels) {
        int id = -1;
        for (const auto& [l, i] : seen)
            if (l == lab) { id = i; break; }
        if (id < 0) {
            id = static_cast<int>(seen.size());
            seen.emplace_back(lab, id);
        }
        c.colors.push_back(id);
    }
    c.num_colors = static_cast<int>(seen.size());
    return c;
}

namespace {

int distinct_colors_on(const Edge& e, const Coloring& c) {
    int found[64];
    int k = 0;
    std::vector<int> spill;
    for (int v : e) {
        if (v < 0 || v >= static_cast<int>(c.colors.size()))
            throw std::out_of_range("edge references vertex " + std::to_string(v) +
                                    " outside the coloring");
        int col = c.colors[v];
        bool fresh = true;
        for (int i = 0; i < k; ++i)
            if (found[i] == col) { fresh = false; break; }
        if (fresh && !spill.empty())
            for (int s : spill)
                if (s == col) { fresh = false; break; }
        if (fresh) {
            if (k < 64) found[k++] = col;
            else spill.push_back(col);
        }
    }
    return k + static_cast<int>(spill.size());
}

Edge normalized_edge(Edge e, int n) {
    if (e.empty()) throw std::invalid_argument("empty edge");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] >= n)
            throw std::invalid_argument("edge vertex " + std::to_string(e[i]) +
                                        " out of range for n=" + std::to_string(n));
        if (i > 0 && e[i] == e[i - 1])
            throw std::invalid_argument("repeated vertex " + std::to_string(e[i]) +
                                        " in edge");
    }
    return e;
}

std::vector<Edge> canonical_family(std::vector<Edge> edges, int n, const char* name) {
    for (Edge& e : edges) e = normalized_edge(std::move(e), n);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    // Sperner: only pairs of different sizes can nest.
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j || edges[i].size() >= edges[j].size()) continue;
            if (std::includes(edges[j].begin(), edges[j].end(), edges[i].begin(),
                              edges[i].end()))
                throw std::invalid_argument(std::string(name) +
                                            " family is not Sperner: an edge contains another");
        }
    return edges;
}

}  // namespace

bool is_properly_colored_c(const Edge& e, const Coloring& c) {
    if (e.empty()) throw std::invalid_argument("empty edge");
    return distinct_colors_on(e, c) < static_cast<int>(e.size());
}

bool is_properly_colored_d(const Edge& e, const Coloring& c) {
    if (e.empty()) throw std::invalid_argument("empty edge");
    return distinct_colors_on(e, c) > 1;
}

MixedHypergraph::MixedHypergraph(int n, std::vector<Edge> c_edges,
                                 std::vector<Edge> d_edges)
    : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    c_edges_ = canonical_family(std::move(c_edges), n, "co-edge");
    d_edges_ = canonical_family(std::move(d_edges), n, "edge");
    build_index();
}

MixedHypergraph MixedHypergraph::bi(int n, std::vector<Edge> edges) {
    auto copy = edges;
    return MixedHypergraph(n, std::move(copy), std::move(edges));
}

void MixedHypergraph::build_index() {
    members_.clear();
    std::size_t i = 0, j = 0;
    while (i < c_edges_.size() || j < d_edges_.size()) {
        EdgeMember m;
        if (j == d_edges_.size() ||
            (i < c_edges_.size() && c_edges_[i] < d_edges_[j])) {
            m.verts = c_edges_[i++];
            m.in_c = true;
        } else if (i == c_edges_.size() || d_edges_[j] < c_edges_[i]) {
            m.verts = d_edges_[j++];
            m.in_d = true;
        } else {
            m.verts = c_edges_[i];
            m.in_c = m.in_d = true;
            ++i, ++j;
        }
        m.mask = Bitset(n_);
        for (int v : m.verts) m.mask.set(v);
        members_.push_back(std::move(m));
    }
    incidence_.assign(n_, {});
    for (std::size_t k = 0; k < members_.size(); ++k)
        for (int v : members_[k].verts) incidence_[v].push_back(static_cast<int>(k));
}

const std::vector<int>& MixedHypergraph::incident_members(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    return incidence_[v];
}

int MixedHypergraph::degree(int v) const {
    return static_cast<int>(incident_members(v).size());
}

std::vector<int> MixedHypergraph::neighborhood(int v) const {
    Bitset seen(n_);
    for (int k : incident_members(v)) seen |= members_[k].mask;
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && seen.test(u)) out.push_back(u);
    return out;
}

bool MixedHypergraph::is_independent(const std::vector<int>& s) const {
    Bitset mask(n_);
    for (int v : s) {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
        mask.set(v);
    }
    for (const EdgeMember& m : members_)
        if (m.mask.is_subset_of(mask)) return false;
    return true;
}

std::optional<int> MixedHypergraph::uniformity() const {
    if (members_.empty()) return std::nullopt;
    std::size_t r = members_.front().verts.size();
    for (const EdgeMember& m : members_)
        if (m.verts.size() != r) return std::nullopt;
    return static_cast<int>(r);
}

bool is_proper(const MixedHypergraph& h, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != h.n())
        throw std::out_of_range("coloring length does not match vertex count");
    for (const EdgeMember& m : h.members()) {
        if (m.in_c && !is_properly_colored_c(m.verts, c)) return false;
        if (m.in_d && !is_properly_colored_d(m.verts, c)) return false;
    }
    return true;
}

MixedHypergraph delete_edge(const MixedHypergraph& h, const Edge& e) {
    Edge key = e;
    std::sort(key.begin(), key.end());
    auto drop = [&key](std::vector<Edge> from, bool* hit) {
        auto it = std::find(from.begin(), from.end(), key);
        if (it != from.end()) {
            from.erase(it);
            *hit = true;
        }
        return from;
    };
    bool found = false;
    std::vector<Edge> c = drop(h.c_edges(), &found);
    std::vector<Edge> d = drop(h.d_edges(), &found);
    if (!found) throw std::invalid_argument("edge not present");
    return MixedHypergraph(h.n(), std::move(c), std::move(d));
}

InducedSubgraph induced(const MixedHypergraph& h, const std::vector<int>& s) {
    std::vector<int> keep = s;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> new_of(h.n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= h.n())
            throw std::out_of_range("vertex out of range");
        new_of[keep[i]] = static_cast<int>(i);
    }
    auto remap = [&](const std::vector<Edge>& from) {
        std::vector<Edge> out;
        for (const Edge& e : from) {
            Edge m;
            m.reserve(e.size());
            for (int v : e) {
                if (new_of[v] < 0) { m.clear(); break; }
                m.push_back(new_of[v]);
            }
            if (!m.empty()) out.push_back(std::move(m));
        }
        return out;
    };
    InducedSubgraph out{
        MixedHypergraph(static_cast<int>(keep.size()), remap(h.c_edges()),
                        remap(h.d_edges())),
        std::move(keep)};
    return out;
}

BiHypergraph::BiHypergraph(MixedHypergraph h) : h_(std::move(h)) {
    if (!h_.is_bi())
        throw std::invalid_argument("not a bi-hypergraph: C and D differ");
}

}  // namespace bihyp

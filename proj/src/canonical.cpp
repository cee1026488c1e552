#include "bihyp/canonical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bihyp {

bool colex_less(const Edge& a, const Edge& b) {
    auto i = a.rbegin();
    auto j = b.rbegin();
    for (; i != a.rend() && j != b.rend(); ++i, ++j)
        if (*i != *j) return *i < *j;
    return a.size() < b.size();
}

std::uint64_t canonical_hash(int n, const std::vector<Edge>& edges) {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(n));
    for (const Edge& e : edges) {
        mix(static_cast<std::uint64_t>(e.size()));
        for (int v : e) mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 0xf];
    return s;
}

namespace {

// Lexicographic comparison of colex-sorted edge lists. When one list is a
// prefix of the other the longer one is smaller: its next edge uses only
// labels the shorter branch has not reached, so the shorter branch's
// completion places a colex-greater edge at that position.
int prefix_compare(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::size_t k = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < k; ++i) {
        if (colex_less(a[i], b[i])) return -1;
        if (colex_less(b[i], a[i])) return 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() > b.size() ? -1 : 1;
}

class CanonSearch {
public:
    explicit CanonSearch(const BiHypergraph& h)
        : n_(h.n()), edges_(h.edges()), edge_set_(edges_.begin(), edges_.end()) {
        label_of_.assign(n_, -1);
        incident_.assign(n_, {});
        for (std::size_t k = 0; k < edges_.size(); ++k)
            for (int v : edges_[k]) incident_[v].push_back(static_cast<int>(k));
    }

    std::vector<Edge> run() {
        cur_.clear();
        best_.clear();
        have_best_ = false;
        dfs(0, true);
        std::vector<Edge> out = best_;
        return out;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::set<Edge> edge_set_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> label_of_;  // original vertex -> assigned label or -1
    std::vector<Edge> cur_;      // relabeled edges fully assigned so far
    std::vector<Edge> best_;
    bool have_best_ = false;

    // Relabeled edges completed by giving label d to original vertex w.
    std::vector<Edge> extension(int w, int d) const {
        std::vector<Edge> ext;
        for (int k : incident_[w]) {
            Edge img;
            img.reserve(edges_[k].size());
            bool full = true;
            for (int u : edges_[k]) {
                int lab = u == w ? d : label_of_[u];
                if (lab < 0) { full = false; break; }
                img.push_back(lab);
            }
            if (!full) continue;
            std::sort(img.begin(), img.end());
            ext.push_back(std::move(img));
        }
        std::sort(ext.begin(), ext.end(), colex_less);
        return ext;
    }

    // True when swapping a and b maps the edge set onto itself.
    bool swap_is_automorphism(int a, int b) const {
        for (const Edge& e : edges_) {
            Edge img = e;
            for (int& v : img) {
                if (v == a) v = b;
                else if (v == b) v = a;
            }
            std::sort(img.begin(), img.end());
            if (!edge_set_.count(img)) return false;
        }
        return true;
    }

    // tight: cur_ matches the incumbent prefix exactly, so comparisons
    // against best_ from cur_.size() onward are meaningful. Once the prefix
    // goes strictly smaller the subtree can never be pruned.
    void dfs(int depth, bool tight) {
        if (depth == n_) {
            if (!have_best_ || prefix_compare(cur_, best_) < 0) {
                best_ = cur_;
                have_best_ = true;
            }
            return;
        }
        // Only candidates with the minimal completed-edge extension can start
        // the minimal completion; ties that differ by a transposition
        // automorphism share a subtree and collapse to one.
        std::vector<std::pair<std::vector<Edge>, int>> ties;
        for (int w = 0; w < n_; ++w) {
            if (label_of_[w] >= 0) continue;
            std::vector<Edge> ext = extension(w, depth);
            if (ties.empty()) {
                ties.emplace_back(std::move(ext), w);
                continue;
            }
            int cmp = prefix_compare(ext, ties.front().first);
            if (cmp < 0) {
                ties.clear();
                ties.emplace_back(std::move(ext), w);
            } else if (cmp == 0) {
                ties.emplace_back(std::move(ext), w);
            }
        }
        std::vector<int> picks;
        for (std::size_t i = 0; i < ties.size(); ++i) {
            bool dup = false;
            for (int p : picks)
                if (swap_is_automorphism(p, ties[i].second)) { dup = true; break; }
            if (!dup) picks.push_back(ties[i].second);
        }

        const std::vector<Edge>& ext = ties.front().first;
        std::size_t base = cur_.size();
        // Compare the would-be block against the incumbent once per node;
        // all picks share the same block.
        bool child_tight = tight;
        if (have_best_ && tight) {
            std::size_t i = 0;
            for (; i < ext.size(); ++i) {
                std::size_t pos = base + i;
                if (colex_less(ext[i], best_[pos])) break;
                if (colex_less(best_[pos], ext[i])) return;
            }
            child_tight = i == ext.size();
        }
        for (int w : picks) {
            label_of_[w] = depth;
            cur_.insert(cur_.end(), ext.begin(), ext.end());
            dfs(depth + 1, child_tight);
            cur_.resize(base);
            label_of_[w] = -1;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const BiHypergraph& h) {
    if (h.n() > 12)
        throw std::invalid_argument(
            "canonical_form refuses orders above 12 (relabeling search)");
    CanonicalForm f;
    f.n = h.n();
    f.edges = CanonSearch(h).run();
    f.hash = canonical_hash(f.n, f.edges);
    return f;
}

bool are_isomorphic(const BiHypergraph& a, const BiHypergraph& b) {
    if (a.n() != b.n() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace bihyp

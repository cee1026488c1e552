#include "bihyp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace bihyp {

std::string to_string(Status s) {
    return s == Status::Colorable ? "colorable" : "uncolorable";
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

// An edge of size 1 can satisfy neither side; a bi-edge of size 2 would need
// 1 < |f(e)| < 2. Such instances are legal inputs and simply uncolorable.
bool trivially_uncolorable(const MixedHypergraph& h) {
    for (const EdgeMember& m : h.members()) {
        if (m.verts.size() == 1 && (m.in_c || m.in_d)) return true;
        if (m.verts.size() == 2 && m.in_c && m.in_d) return true;
    }
    return false;
}

// Shared backtracking core. Vertices are colored along a fixed order with
// first-occurrence symmetry breaking (labels 0..used). Candidate labels for
// the vertex closing an edge are filtered so that completed edges are proper
// by construction: a D-edge whose other vertices are monochromatic forbids
// that color, a C-edge whose other vertices are rainbow restricts to them.
class Searcher {
public:
    Searcher(const MixedHypergraph& h, std::vector<int> order, int cap, bool exact)
        : h_(h),
          n_(h.n()),
          cap_(cap),
          exact_(exact),
          order_(std::move(order)),
          color_(n_, -1),
          uncolored_(h.members().size()) {
        for (std::size_t k = 0; k < h.members().size(); ++k)
            uncolored_[k] = static_cast<int>(h.members()[k].verts.size());
    }

    // Calls on_leaf for every completed assignment; stops when it returns false.
    void run(const std::function<bool(const std::vector<int>&)>& on_leaf) {
        on_leaf_ = &on_leaf;
        stopped_ = false;
        if (n_ == 0) {
            if (!exact_ || cap_ == 0) (*on_leaf_)(color_);
            return;
        }
        dfs(0, 0);
    }

    long long nodes() const { return nodes_; }

private:
    const MixedHypergraph& h_;
    int n_;
    int cap_;
    bool exact_;
    std::vector<int> order_;
    std::vector<int> color_;
    std::vector<int> uncolored_;
    long long nodes_ = 0;
    bool stopped_ = false;
    const std::function<bool(const std::vector<int>&)>* on_leaf_ = nullptr;

    bool dfs(int depth, int used) {
        if (exact_ && cap_ - used > n_ - depth) return true;  // cannot reach cap
        if (depth == n_) {
            if (exact_ && used != cap_) return true;
            if (!(*on_leaf_)(color_)) { stopped_ = true; return false; }
            return true;
        }
        int v = order_[depth];
        int hi = std::min(used, cap_ - 1);  // highest candidate label

        // Candidate filter from edges this assignment completes.
        char stack_ok[128];
        std::vector<char> heap_ok;
        char* ok = stack_ok;
        if (hi >= 128) {
            heap_ok.assign(hi + 1, 1);
            ok = heap_ok.data();
        } else {
            std::fill(stack_ok, stack_ok + hi + 1, 1);
        }

        for (int k : h_.incident_members(v)) {
            if (uncolored_[k] != 1) continue;
            const EdgeMember& m = h_.members()[k];
            int stack_pal[64];
            std::vector<int> heap_pal;
            int* palette = stack_pal;
            if (m.verts.size() > 64) {
                heap_pal.resize(m.verts.size());
                palette = heap_pal.data();
            }
            int distinct = 0;
            for (int u : m.verts) {
                int c = color_[u];
                if (c < 0) continue;
                bool fresh = true;
                for (int i = 0; i < distinct; ++i)
                    if (palette[i] == c) { fresh = false; break; }
                if (fresh) palette[distinct++] = c;
            }
            if (m.in_d && distinct == 1) ok[palette[0]] = 0;
            if (m.in_c && distinct == static_cast<int>(m.verts.size()) - 1) {
                // Completing rainbow is the only way to violate the co-edge.
                for (int c = 0; c <= hi; ++c) {
                    if (!ok[c]) continue;
                    bool on_edge = false;
                    for (int i = 0; i < distinct; ++i)
                        if (palette[i] == c) { on_edge = true; break; }
                    if (!on_edge) ok[c] = 0;
                }
            }
        }

        for (int c = 0; c <= hi; ++c) {
            if (!ok[c]) continue;
            ++nodes_;
            color_[v] = c;
            for (int k : h_.incident_members(v)) --uncolored_[k];
            bool keep_going = dfs(depth + 1, std::max(used, c + 1));
            for (int k : h_.incident_members(v)) ++uncolored_[k];
            color_[v] = -1;
            if (!keep_going) return false;
        }
        return !stopped_;
    }
};

std::vector<int> identity_order(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

std::vector<int> degree_order(const MixedHypergraph& h) {
    std::vector<int> order = identity_order(h.n());
    std::stable_sort(order.begin(), order.end(), [&h](int a, int b) {
        return h.degree(a) > h.degree(b);
    });
    return order;
}

Coloring checked_witness(const MixedHypergraph& h, const std::vector<int>& leaf) {
    Coloring w = Coloring::from_labels(leaf);
    if (!is_proper(h, w))
        throw std::logic_error("solver produced an improper witness");
    return w;
}

}  // namespace

Verdict decide_colorable(const MixedHypergraph& h, const SolveOptions& opts) {
    auto t0 = Clock::now();
    Verdict v;
    if (trivially_uncolorable(h)) {
        v.elapsed_ms = ms_since(t0);
        return v;
    }
    int cap = opts.max_colors > 0 ? std::min(opts.max_colors, std::max(h.n(), 1))
                                  : std::max(h.n(), 1);
    Searcher s(h, degree_order(h), cap, false);
    std::optional<Coloring> found;
    s.run([&](const std::vector<int>& leaf) {
        found = checked_witness(h, leaf);
        return false;
    });
    v.nodes_explored = s.nodes();
    if (found) {
        v.status = Status::Colorable;
        v.witness = std::move(found);
    }
    v.elapsed_ms = ms_since(t0);
    return v;
}

void for_each_proper_coloring(const MixedHypergraph& h, int max_colors,
                              const std::function<bool(const Coloring&)>& fn) {
    if (trivially_uncolorable(h)) return;
    int cap = max_colors > 0 ? std::min(max_colors, std::max(h.n(), 1))
                             : std::max(h.n(), 1);
    Searcher s(h, identity_order(h.n()), cap, false);
    s.run([&](const std::vector<int>& leaf) {
        return fn(checked_witness(h, leaf));
    });
}

std::vector<Coloring> enumerate_proper_colorings(const MixedHypergraph& h,
                                                 int max_colors) {
    std::vector<Coloring> out;
    for_each_proper_coloring(h, max_colors, [&out](const Coloring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

ChiBar upper_chromatic_number(const MixedHypergraph& h) {
    auto t0 = Clock::now();
    ChiBar result;
    if (h.n() == 0) {
        result.value = 0;
        result.witness = Coloring{};
        result.elapsed_ms = ms_since(t0);
        return result;
    }
    if (trivially_uncolorable(h)) {
        result.elapsed_ms = ms_since(t0);
        return result;
    }
    for (int k = h.n(); k >= 1; --k) {
        Searcher s(h, degree_order(h), k, true);
        std::optional<Coloring> found;
        s.run([&](const std::vector<int>& leaf) {
            found = checked_witness(h, leaf);
            return false;
        });
        result.nodes_explored += s.nodes();
        if (found) {
            result.value = k;
            result.witness = std::move(found);
            break;
        }
    }
    result.elapsed_ms = ms_since(t0);
    return result;
}

namespace {

// Restricted growth strings: labels[i] <= 1 + max(labels[0..i-1]).
bool rgs_scan(const MixedHypergraph& h, int i, int mx, std::vector<int>& labels,
              long long& nodes, Coloring& witness) {
    if (i == h.n()) {
        ++nodes;
        Coloring c = Coloring::from_labels(labels);
        if (is_proper(h, c)) {
            witness = std::move(c);
            return true;
        }
        return false;
    }
    for (int c = 0; c <= mx + 1; ++c) {
        labels[i] = c;
        if (rgs_scan(h, i + 1, std::max(mx, c), labels, nodes, witness)) return true;
    }
    return false;
}

}  // namespace

Verdict brute_force_oracle(const MixedHypergraph& h) {
    if (h.n() > 12)
        throw std::invalid_argument(
            "brute_force_oracle refuses orders above 12 (Bell growth)");
    auto t0 = Clock::now();
    Verdict v;
    if (h.n() == 0) {
        Coloring empty;
        if (is_proper(h, empty)) {
            v.status = Status::Colorable;
            v.witness = empty;
        }
        v.nodes_explored = 1;
        v.elapsed_ms = ms_since(t0);
        return v;
    }
    std::vector<int> labels(h.n(), 0);
    Coloring witness;
    if (rgs_scan(h, 1, 0, labels, v.nodes_explored, witness)) {
        v.status = Status::Colorable;
        v.witness = std::move(witness);
    }
    v.elapsed_ms = ms_since(t0);
    return v;
}

}  // namespace bihyp

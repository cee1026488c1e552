#include "bihyp/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "bihyp/analysis.hpp"
#include "bihyp/solver.hpp"
#include "bihyp/store.hpp"
#include "bihyp/version.hpp"

namespace bihyp {

namespace {

using Clock = std::chrono::steady_clock;
using Mask = unsigned __int128;

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// All r-subsets of [n] in colex order; index arithmetic is the standard
// colex rank sum(C(a_i, i)).
std::vector<Edge> colex_subsets(int n, int r) {
    std::vector<Edge> out;
    if (r > n || r < 0) return out;
    if (r == 0) {
        out.push_back({});
        return out;
    }
    // Fill positions from the top so colex order falls out of the loop order.
    std::vector<int> idx(r);
    auto gen = [&](auto&& self, int pos, int hi) -> void {
        if (pos < 0) {
            Edge e(idx.begin(), idx.end());
            out.push_back(e);
            return;
        }
        for (int v = pos; v <= hi; ++v) {
            idx[pos] = v;
            self(self, pos - 1, v - 1);
        }
    };
    gen(gen, r - 1, n - 1);
    for (Edge& e : out) std::sort(e.begin(), e.end());
    return out;
}

int colex_rank(const Edge& e) {
    long long r = 0;
    for (std::size_t i = 0; i < e.size(); ++i) r += binom(e[i], static_cast<int>(i) + 1);
    return static_cast<int>(r);
}

// a < b on equal-size subset masks == lexicographic comparison of the
// ascending index sequences: decided by the lowest differing bit.
bool mask_less(Mask a, Mask b) {
    Mask x = a ^ b;
    if (x == 0) return false;
    Mask low = x & (~x + 1);
    return (a & low) != 0;
}

struct Universe {
    int n = 0, r = 0, N = 0;
    std::vector<Edge> subsets;
    bool fast = false;
    long long nperm = 0;
    std::vector<std::uint8_t> table;  // perm-major subset index map

    std::vector<int> bits(Mask s) const {
        std::vector<int> out;
        std::uint64_t lo = static_cast<std::uint64_t>(s);
        std::uint64_t hi = static_cast<std::uint64_t>(s >> 64);
        while (lo) {
            out.push_back(std::countr_zero(lo));
            lo &= lo - 1;
        }
        while (hi) {
            out.push_back(64 + std::countr_zero(hi));
            hi &= hi - 1;
        }
        return out;
    }

    BiHypergraph decode(Mask s) const {
        std::vector<Edge> edges;
        for (int i : bits(s)) edges.push_back(subsets[i]);
        return BiHypergraph(n, std::move(edges));
    }

    bool is_canonical_fast(Mask s) const {
        auto idx = bits(s);
        for (long long p = 0; p < nperm; ++p) {
            const std::uint8_t* row = table.data() + p * N;
            Mask img = 0;
            for (int i : idx) img |= Mask{1} << row[i];
            if (mask_less(img, s)) return false;
        }
        return true;
    }

    // The family containers sort plain-lex; CanonicalForm lists are
    // colex-sorted, so presentations must be aligned before comparing.
    std::vector<Edge> colex_edges(Mask s) const {
        std::vector<Edge> edges;
        for (int i : bits(s)) edges.push_back(subsets[i]);
        return edges;  // ascending subset index == colex order
    }

    bool is_canonical_generic(Mask s) const {
        return canonical_form(decode(s)).edges == colex_edges(s);
    }

    bool is_canonical(Mask s) const {
        return fast ? is_canonical_fast(s) : is_canonical_generic(s);
    }
};

std::map<std::pair<int, int>, std::shared_ptr<const Universe>> g_universes;
std::mutex g_universes_mu;

std::shared_ptr<const Universe> universe(int n, int r) {
    std::lock_guard<std::mutex> lock(g_universes_mu);
    auto key = std::make_pair(n, r);
    auto it = g_universes.find(key);
    if (it != g_universes.end()) return it->second;

    auto u = std::make_shared<Universe>();
    u->n = n;
    u->r = r;
    u->subsets = colex_subsets(n, r);
    u->N = static_cast<int>(u->subsets.size());
    long long nperm = 1;
    for (int i = 2; i <= n; ++i) nperm *= i;
    u->fast = n <= 9 && u->N <= 120;
    if (u->fast) {
        u->nperm = nperm;
        u->table.resize(static_cast<std::size_t>(nperm) * u->N);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        long long p = 0;
        do {
            std::uint8_t* row = u->table.data() + p * u->N;
            Edge img;
            for (int i = 0; i < u->N; ++i) {
                img = u->subsets[i];
                for (int& v : img) v = perm[v];
                std::sort(img.begin(), img.end());
                row[i] = static_cast<std::uint8_t>(colex_rank(img));
            }
            ++p;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    g_universes[key] = u;
    return u;
}

// Orderly DFS: children extend by a subset index above the current maximum
// and survive exactly when still canonical. visit() returning false stops the
// walk (used for the sweep budget).
bool orderly_dfs(const Universe& u, Mask s, int max_idx, int m, int max_edges,
                 const std::function<bool(Mask, int)>& visit) {
    if (!visit(s, m)) return false;
    if (m == max_edges) return true;
    for (int t = max_idx + 1; t < u.N; ++t) {
        Mask child = s | (Mask{1} << t);
        if (u.is_canonical(child))
            if (!orderly_dfs(u, child, t, m + 1, max_edges, visit)) return false;
    }
    return true;
}

bool passes_filters(const BiHypergraph& h, const SweepFilters& f) {
    if (f.min_degree > 0)
        for (int v = 0; v < h.n(); ++v)
            if (h.mixed().degree(v) < f.min_degree) return false;
    if (f.all_pairs_adjacent)
        for (int v = 0; v < h.n(); ++v)
            if (static_cast<int>(h.mixed().neighborhood(v).size()) != h.n() - 1)
                return false;
    if (f.connected) {
        if (h.n() > 1) {
            std::vector<char> seen(h.n(), 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            int reached = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : h.mixed().neighborhood(v))
                    if (!seen[u]) {
                        seen[u] = 1;
                        ++reached;
                        stack.push_back(u);
                    }
            }
            if (reached != h.n()) return false;
        }
    }
    return true;
}

}  // namespace

void enumerate_bihypergraphs(
    int n, int r, int min_edges, int max_edges,
    const std::function<void(const BiHypergraph&, const CanonicalForm&)>& fn) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("enumeration supports orders 1..12");
    if (r < 1) throw std::invalid_argument("need r >= 1");
    auto u = universe(n, r);
    if (min_edges < 0 || max_edges < min_edges || max_edges > u->N)
        throw std::invalid_argument("infeasible edge range: need 0 <= min <= max <= C(n,r)");
    orderly_dfs(*u, 0, -1, 0, max_edges, [&](Mask s, int m) {
        if (m >= min_edges && m <= max_edges) {
            CanonicalForm f;
            f.n = n;
            f.edges = u->colex_edges(s);
            f.hash = canonical_hash(f.n, f.edges);
            fn(u->decode(s), f);
        }
        return true;
    });
}

std::string default_sweep_id(const SweepSpec& spec) {
    std::string id = "n" + std::to_string(spec.n) + "-r" + std::to_string(spec.r) +
                     "-m" + std::to_string(spec.min_edges) + "-" +
                     std::to_string(spec.max_edges);
    if (spec.filters.min_degree > 0)
        id += "-mindeg" + std::to_string(spec.filters.min_degree);
    if (spec.filters.all_pairs_adjacent) id += "-adj";
    if (spec.filters.connected) id += "-conn";
    if (spec.predicate == SweepPredicate::MinimalUncolorable) id += "-minimal";
    return id;
}

SweepSummary run_sweep(const SweepSpec& spec, VerdictStore* store) {
    auto t0 = Clock::now();
    if (spec.n < 1 || spec.n > 12)
        throw std::invalid_argument("sweep supports orders 1..12");
    if (spec.r < 1) throw std::invalid_argument("need r >= 1");
    auto u = universe(spec.n, spec.r);
    if (spec.min_edges < 0 || spec.max_edges < spec.min_edges ||
        spec.max_edges > u->N)
        throw std::invalid_argument(
            "infeasible edge range: need 0 <= min <= max <= C(n,r)");

    SweepSummary out;
    out.spec = spec;
    out.id = spec.id.empty() ? default_sweep_id(spec) : spec.id;
    out.classes_by_edge_count.assign(spec.max_edges + 1, 0);

    struct Tally {
        long long classes = 0;
        std::vector<long long> by_m;
        long long filtered = 0;
        long long violations = 0;
        std::vector<Mask> bad;
    };

    auto process = [&](Mask s, int m, Tally& tally) {
        if (m < spec.min_edges || m > spec.max_edges) return;
        ++tally.classes;
        ++tally.by_m[m];
        BiHypergraph h = u->decode(s);
        if (!passes_filters(h, spec.filters)) return;
        ++tally.filtered;
        Verdict v = decide_colorable(h);
        bool ok = true;
        if (spec.predicate == SweepPredicate::Colorable) {
            ok = v.status == Status::Colorable;
        } else {
            ok = v.status == Status::Uncolorable &&
                 is_minimal_uncolorable(h, 1).minimal_uncolorable;
        }
        if (!ok) {
            ++tally.violations;
            tally.bad.push_back(s);
        }
        if (store) {
            VerdictRecord rec;
            rec.n = spec.n;
            rec.r = spec.r;
            rec.edges = u->colex_edges(s);
            rec.hash = hash_hex(canonical_hash(spec.n, rec.edges));
            rec.sweep_id = out.id;
            rec.status = to_string(v.status);
            if (v.witness) rec.witness = v.witness->colors;
            rec.timestamp = now_iso8601_utc();
            rec.version = kVersion;
            store->insert(rec);
        }
    };

    int depth = std::min(spec.shard_depth, spec.max_edges);
    if (depth < 0) depth = 0;

    // Serial phase: everything above the shard roots, then collect the roots.
    std::vector<std::pair<Mask, int>> roots;  // (mask, max index)
    Tally serial;
    serial.by_m.assign(spec.max_edges + 1, 0);
    orderly_dfs(*u, 0, -1, 0, depth, [&](Mask s, int m) {
        if (m < depth) {
            process(s, m, serial);
        } else {
            auto idx = u->bits(s);
            roots.emplace_back(s, idx.empty() ? -1 : idx.back());
        }
        return true;
    });

    int jobs = spec.jobs;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, std::max<std::size_t>(roots.size(), 1));

    std::vector<Tally> tallies(jobs);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> timed_out{false};
    auto deadline = t0 + std::chrono::milliseconds(spec.budget_ms > 0
                                                       ? spec.budget_ms
                                                       : 1LL << 60);

    auto worker = [&](int wi) {
        Tally& tally = tallies[wi];
        tally.by_m.assign(spec.max_edges + 1, 0);
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= roots.size() || timed_out.load()) break;
            auto [mask, max_idx] = roots[i];
            bool done = orderly_dfs(*u, mask, max_idx, depth, spec.max_edges,
                                    [&](Mask s, int m) {
                                        if (spec.budget_ms > 0 &&
                                            Clock::now() > deadline) {
                                            timed_out.store(true);
                                            return false;
                                        }
                                        process(s, m, tally);
                                        return true;
                                    });
            if (!done) break;
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker, i);
        for (auto& t : pool) t.join();
    }
    if (timed_out.load()) throw SweepTimeout("sweep exceeded its time budget");

    tallies.push_back(std::move(serial));
    std::vector<Mask> bad;
    for (const Tally& t : tallies) {
        out.classes += t.classes;
        out.filtered += t.filtered;
        out.violations += t.violations;
        for (std::size_t m = 0; m < t.by_m.size(); ++m)
            out.classes_by_edge_count[m] += t.by_m[m];
        bad.insert(bad.end(), t.bad.begin(), t.bad.end());
    }
    std::sort(bad.begin(), bad.end(), [](Mask a, Mask b) {
        int pa = 0, pb = 0;
        for (Mask x = a; x; x &= x - 1) ++pa;
        for (Mask x = b; x; x &= x - 1) ++pb;
        if (pa != pb) return pa < pb;
        return mask_less(a, b);
    });
    for (Mask s : bad) {
        CanonicalForm f;
        f.n = spec.n;
        f.edges = u->colex_edges(s);
        f.hash = canonical_hash(f.n, f.edges);
        out.counterexamples.push_back(std::move(f));
    }
    out.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
            .count();
    if (store) store->write_sweep_meta(out);
    return out;
}

std::string summary_to_json(const SweepSummary& s) {
    nlohmann::json j;
    j["id"] = s.id;
    j["spec"] = {{"n", s.spec.n},
                 {"r", s.spec.r},
                 {"min_edges", s.spec.min_edges},
                 {"max_edges", s.spec.max_edges},
                 {"filters",
                  {{"min_degree", s.spec.filters.min_degree},
                   {"all_pairs_adjacent", s.spec.filters.all_pairs_adjacent},
                   {"connected", s.spec.filters.connected}}},
                 {"predicate", s.spec.predicate == SweepPredicate::Colorable
                                   ? "colorable"
                                   : "minimal-uncolorable"},
                 {"shard_depth", s.spec.shard_depth}};
    j["classes"] = s.classes;
    j["classes_by_edge_count"] = s.classes_by_edge_count;
    j["filtered"] = s.filtered;
    j["violations"] = s.violations;
    auto arr = nlohmann::json::array();
    for (const CanonicalForm& f : s.counterexamples)
        arr.push_back({{"n", f.n}, {"edges", f.edges}, {"hash", hash_hex(f.hash)}});
    j["counterexamples"] = arr;
    j["elapsed_ms"] = s.elapsed_ms;
    return j.dump(2) + "\n";
}

}  // namespace bihyp

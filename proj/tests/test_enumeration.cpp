#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "bihyp/certificate.hpp"
#include "bihyp/enumeration.hpp"
#include "bihyp/solver.hpp"
#include "bihyp/store.hpp"

using namespace bihyp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("bihyp-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

// All r-subsets of [n] in a fixed order.
std::vector<Edge> all_subsets(int n, int r) {
    std::vector<Edge> out;
    std::vector<int> pick(r);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == r) {
            out.emplace_back(pick.begin(), pick.end());
            return;
        }
        for (int v = start; v < n; ++v) {
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Classes per edge count by brute force over all subsets of the edge pool,
// deduplicated through canonical_form. Only usable for tiny n.
std::map<int, long long> naive_class_counts(int n, int r, int max_edges) {
    std::vector<Edge> pool = all_subsets(n, r);
    std::set<std::vector<Edge>> seen;
    std::map<int, long long> counts;
    for (unsigned long mask = 0; mask < (1ul << pool.size()); ++mask) {
        int m = __builtin_popcountl(mask);
        if (m > max_edges) continue;
        std::vector<Edge> edges;
        for (size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1) edges.push_back(pool[i]);
        CanonicalForm f = canonical_form(BiHypergraph(n, edges));
        if (seen.insert(f.edges).second) ++counts[m];
    }
    return counts;
}

}  // namespace

TEST_CASE("class counts match a naive dedup oracle") {
    // All 3-uniform families on 4 and 5 vertices up to isomorphism.
    for (int n : {4, 5}) {
        int pool = n == 4 ? 4 : 10;
        int cap = n == 4 ? 4 : 4;  // 2^10 subsets is fine; cap m for speed
        std::map<int, long long> want = naive_class_counts(n, 3, cap);
        std::map<int, long long> got;
        enumerate_bihypergraphs(n, 3, 0, cap,
                                [&](const BiHypergraph& h, const CanonicalForm&) {
                                    ++got[static_cast<int>(h.edges().size())];
                                });
        CHECK(got == want);
        (void)pool;
    }
}

TEST_CASE("known totals for small sweeps") {
    long long n4 = 0;
    enumerate_bihypergraphs(4, 3, 0, 4,
                            [&](const BiHypergraph&, const CanonicalForm&) { ++n4; });
    CHECK(n4 == 5);

    long long n5small = 0;
    enumerate_bihypergraphs(5, 3, 0, 2,
                            [&](const BiHypergraph&, const CanonicalForm&) { ++n5small; });
    CHECK(n5small == 4);

    long long n6 = 0;
    SweepSpec spec{.n = 6, .r = 3, .min_edges = 0, .max_edges = 9};
    SweepSummary s = run_sweep(spec);
    n6 = s.classes;
    CHECK(n6 == 892);
    CHECK(s.violations == 0);
    CHECK(s.filtered == s.classes);
    long long by_m = 0;
    for (long long c : s.classes_by_edge_count) by_m += c;
    CHECK(by_m == s.classes);
}

TEST_CASE("every visited class is its own canonical form, no repeats") {
    // The walk decides canonicality through the permutation table; the
    // relabeling search must agree on every emitted representative.
    std::set<std::uint64_t> hashes;
    enumerate_bihypergraphs(6, 3, 0, 5,
                            [&](const BiHypergraph& h, const CanonicalForm& f) {
                                CHECK(canonical_form(h) == f);
                                CHECK(canonical_form(h).hash == f.hash);
                                std::vector<Edge> sorted = h.edges();
                                std::sort(sorted.begin(), sorted.end(), colex_less);
                                CHECK(sorted == f.edges);
                                CHECK(hashes.insert(f.hash).second);
                            });
    CHECK(hashes.size() == 76);
}

TEST_CASE("shard layout does not change counts") {
    SweepSpec base{.n = 6, .r = 3, .min_edges = 0, .max_edges = 7};
    SweepSummary ref = run_sweep(base);
    for (int jobs : {1, 4, 16}) {
        for (int depth : {2, 3, 4}) {
            SweepSpec spec = base;
            spec.jobs = jobs;
            spec.shard_depth = depth;
            SweepSummary s = run_sweep(spec);
            CHECK(s.classes == ref.classes);
            CHECK(s.filtered == ref.filtered);
            CHECK(s.violations == ref.violations);
            CHECK(s.classes_by_edge_count == ref.classes_by_edge_count);
        }
    }
}

TEST_CASE("the adjacency filter drops no uncolorable class") {
    // Order 7 with at most 6 edges: identical (empty) sets of uncolorable
    // classes with and without the filter, so filtering is sound there.
    SweepSpec open{.n = 7, .r = 3, .min_edges = 0, .max_edges = 6};
    SweepSpec adj = open;
    adj.filters.all_pairs_adjacent = true;
    SweepSummary a = run_sweep(open);
    SweepSummary b = run_sweep(adj);
    CHECK(a.violations == 0);
    CHECK(b.violations == 0);
    CHECK(a.classes == b.classes);
    CHECK(b.filtered < a.filtered);
}

TEST_CASE("degree and connectivity filters") {
    SweepSpec spec{.n = 5, .r = 3, .min_edges = 0, .max_edges = 9};
    spec.filters.min_degree = 1;
    spec.filters.connected = true;
    SweepSummary s = run_sweep(spec);
    CHECK(s.classes == 33);
    CHECK(s.filtered < s.classes);
    // Count independently: filtered = classes where every vertex is covered
    // and the shared-edge graph is connected.
    long long by_hand = 0;
    enumerate_bihypergraphs(5, 3, 0, 9,
                            [&](const BiHypergraph& h, const CanonicalForm&) {
                                MixedHypergraph m = h.mixed();
                                for (int v = 0; v < m.n(); ++v)
                                    if (m.degree(v) == 0) return;
                                std::vector<char> seen(m.n(), 0);
                                std::vector<int> stack{0};
                                seen[0] = 1;
                                while (!stack.empty()) {
                                    int v = stack.back();
                                    stack.pop_back();
                                    for (int w : m.neighborhood(v))
                                        if (!seen[w]) {
                                            seen[w] = 1;
                                            stack.push_back(w);
                                        }
                                }
                                for (char c : seen)
                                    if (!c) return;
                                ++by_hand;
                            });
    CHECK(s.filtered == by_hand);
}

TEST_CASE("minimal-uncolorable predicate flags non-minimal classes") {
    // At order 5 with up to 9 edges every class is colorable, hence not
    // minimal uncolorable: every filtered class is a violation.
    SweepSpec spec{.n = 5, .r = 3, .min_edges = 0, .max_edges = 9};
    spec.predicate = SweepPredicate::MinimalUncolorable;
    SweepSummary s = run_sweep(spec);
    CHECK(s.violations == s.filtered);
    CHECK_FALSE(s.counterexamples.empty());

    // K(5,3,3) is the unique class with all ten edges and it is minimal.
    SweepSpec full{.n = 5, .r = 3, .min_edges = 10, .max_edges = 10};
    full.predicate = SweepPredicate::MinimalUncolorable;
    SweepSummary whole = run_sweep(full);
    CHECK(whole.classes == 1);
    CHECK(whole.violations == 0);
}

TEST_CASE("identifiers derive from the parameters") {
    SweepSpec spec{.n = 6, .r = 3, .min_edges = 0, .max_edges = 9};
    CHECK(default_sweep_id(spec) == "n6-r3-m0-9");
    spec.filters.all_pairs_adjacent = true;
    CHECK(default_sweep_id(spec) == "n6-r3-m0-9-adj");
    spec.id = "custom";
    SweepSummary s = run_sweep(spec);
    CHECK(s.id == "custom");
}

TEST_CASE("sweeps validate their parameters") {
    SweepSpec bad{.n = 5, .r = 3, .min_edges = 0, .max_edges = 11};
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
    SweepSpec inverted{.n = 5, .r = 3, .min_edges = 4, .max_edges = 2};
    CHECK_THROWS_AS(run_sweep(inverted), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_bihypergraphs(
                        13, 3, 0, 1, [](const BiHypergraph&, const CanonicalForm&) {}),
                    std::invalid_argument);
}

TEST_CASE("a tiny budget trips the timeout") {
    SweepSpec spec{.n = 7, .r = 3, .min_edges = 0, .max_edges = 9};
    spec.budget_ms = 1;
    CHECK_THROWS_AS(run_sweep(spec), SweepTimeout);
}

TEST_CASE("summary serialization carries the counts") {
    SweepSpec spec{.n = 5, .r = 3, .min_edges = 0, .max_edges = 3};
    SweepSummary s = run_sweep(spec);
    nlohmann::json doc = nlohmann::json::parse(summary_to_json(s));
    CHECK(doc.at("id") == s.id);
    CHECK(doc.at("classes") == s.classes);
    CHECK(doc.at("violations") == 0);
    CHECK(doc.at("spec").at("n") == 5);
}

TEST_CASE("store round trip, idempotence, and contradiction") {
    TempDir tmp;
    VerdictRecord rec;
    rec.hash = "00000000deadbeef";
    rec.n = 5;
    rec.r = 3;
    rec.edges = {{0, 1, 2}, {2, 3, 4}};
    rec.sweep_id = "unit";
    rec.status = "colorable";
    rec.witness = std::vector<int>{0, 0, 1, 0, 0};
    rec.timestamp = now_iso8601_utc();
    rec.version = "0.1.0";

    {
        VerdictStore store(tmp.path.string());
        CHECK(store.record_count() == 0);
        store.insert(rec);
        store.insert(rec);  // same verdict: no-op
        CHECK(store.record_count() == 1);

        VerdictRecord flipped = rec;
        flipped.status = "uncolorable";
        flipped.witness.reset();
        CHECK_THROWS_AS(store.insert(flipped), StoreContradiction);

        const VerdictRecord* got = store.find(rec.hash);
        REQUIRE(got != nullptr);
        CHECK(got->edges == rec.edges);
        CHECK(got->witness == rec.witness);
        CHECK(store.find("ffffffffffffffff") == nullptr);
    }

    // Reload from disk.
    VerdictStore reloaded(tmp.path.string());
    CHECK(reloaded.record_count() == 1);
    CHECK(reloaded.records_for_sweep("unit").size() == 1);
    CHECK(reloaded.records_for_sweep("other").empty());
}

TEST_CASE("record lines survive the round trip") {
    VerdictRecord rec;
    rec.hash = "0123456789abcdef";
    rec.n = 4;
    rec.r = 3;
    rec.edges = {{0, 1, 2}};
    rec.sweep_id = "unit";
    rec.status = "uncolorable";
    rec.timestamp = "2026-08-14T00:00:00Z";
    rec.version = "0.1.0";
    std::string line = record_to_json_line(rec);
    CHECK(line.find('\n') == std::string::npos);
    VerdictRecord back = record_from_json_line(line);
    CHECK(back.hash == rec.hash);
    CHECK(back.edges == rec.edges);
    CHECK(back.status == rec.status);
    CHECK_FALSE(back.witness.has_value());
    CHECK_THROWS_AS(record_from_json_line("{borken"), std::invalid_argument);
}

TEST_CASE("sweep metadata lives in one keyed file") {
    TempDir tmp;
    VerdictStore store(tmp.path.string());
    SweepSpec spec{.n = 4, .r = 3, .min_edges = 0, .max_edges = 4};
    SweepSummary s = run_sweep(spec, &store);
    CHECK(s.classes == 5);
    CHECK(store.record_count() == 5);
    CHECK(store.records_for_sweep(s.id).size() == 5);

    std::optional<std::string> meta = store.read_sweep_meta(s.id);
    REQUIRE(meta.has_value());
    nlohmann::json doc = nlohmann::json::parse(*meta);
    CHECK(doc.at("classes") == 5);
    CHECK_FALSE(store.read_sweep_meta("absent").has_value());
    CHECK(fs::exists(tmp.path / "sweep.meta.json"));
    CHECK(fs::exists(tmp.path / "records.jsonl"));
}

TEST_CASE("certificate assembly and verification") {
    TempDir tmp;
    VerdictStore store(tmp.path.string());
    CHECK_THROWS_AS(verify_m3(store), IncompleteCertificate);

    run_m3_sweeps(store, 2);
    CertificateResult cert = verify_m3(store, 2);
    CHECK(cert.valid);
    nlohmann::json doc = nlohmann::json::parse(cert.json);
    CHECK(doc.at("value") == 10);
    CHECK(doc.at("valid") == true);
    CHECK(doc.at("sweeps").size() == m3_required_sweeps().size());
    CHECK(doc.at("reduction").at("holds") == true);
    CHECK(doc.at("witnesses").size() == 2);

    // Rerunning skips completed sweeps and changes nothing.
    std::size_t before = store.record_count();
    run_m3_sweeps(store, 2);
    CHECK(store.record_count() == before);
}

TEST_CASE("tampered records invalidate the certificate") {
    TempDir tmp;
    {
        VerdictStore store(tmp.path.string());
        run_m3_sweeps(store, 2);
    }
    // Flip one stored verdict on disk.
    fs::path log = tmp.path / "records.jsonl";
    std::ifstream in(log);
    std::string line, out;
    bool flipped = false;
    while (std::getline(in, line)) {
        if (!flipped) {
            size_t at = line.find("\"colorable\"");
            if (at != std::string::npos) {
                // The stale witness stays in place; the checker must catch
                // the status flip regardless.
                line.replace(at, 11, "\"uncolorable\"");
                flipped = true;
            }
        }
        out += line + "\n";
    }
    in.close();
    REQUIRE(flipped);
    std::ofstream(log, std::ios::trunc) << out;

    VerdictStore store(tmp.path.string());
    CertificateResult cert = verify_m3(store, 2);
    CHECK_FALSE(cert.valid);
    nlohmann::json doc = nlohmann::json::parse(cert.json);
    CHECK(doc.at("valid") == false);
    CHECK_FALSE(doc.at("failures").empty());
}

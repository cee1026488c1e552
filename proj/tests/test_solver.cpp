#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "bihyp/constructions.hpp"
#include "bihyp/solver.hpp"

using namespace bihyp;

namespace {

// Independent generator for agreement tests; mirrors nothing in the solver.
std::vector<Edge> random_sperner(std::mt19937_64& rng, int n, int max_edges) {
    std::vector<Edge> fam;
    std::uniform_int_distribution<int> count(0, max_edges);
    int want = count(rng);
    for (int tries = 0; tries < 30 && static_cast<int>(fam.size()) < want; ++tries) {
        int k = std::uniform_int_distribution<int>(1, std::min(n, 4))(rng);
        std::set<int> s;
        while (static_cast<int>(s.size()) < k)
            s.insert(std::uniform_int_distribution<int>(0, n - 1)(rng));
        Edge e(s.begin(), s.end());
        bool clash = false;
        for (const Edge& f : fam) {
            const Edge& lo = f.size() <= e.size() ? f : e;
            const Edge& hi = f.size() <= e.size() ? e : f;
            if (std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) {
                clash = true;
                break;
            }
        }
        if (!clash) fam.push_back(std::move(e));
    }
    return fam;
}

}  // namespace

TEST_CASE("single co-edge on three vertices has four proper colorings") {
    // Set partitions of {0,1,2} minus the all-distinct one.
    MixedHypergraph h(3, {{0, 1, 2}}, {});
    std::vector<Coloring> cols = enumerate_proper_colorings(h);
    CHECK(cols.size() == 4);
    for (const Coloring& c : cols) CHECK(c.num_colors <= 2);
}

TEST_CASE("edgeless instances take every partition") {
    MixedHypergraph h(3, {}, {});
    CHECK(enumerate_proper_colorings(h).size() == 5);  // Bell(3)
    ChiBar cb = upper_chromatic_number(h);
    CHECK(cb.value == 3);
    MixedHypergraph empty(0, {}, {});
    CHECK(decide_colorable(empty).status == Status::Colorable);
    CHECK(upper_chromatic_number(empty).value == 0);
}

TEST_CASE("trivially uncolorable members") {
    CHECK(decide_colorable(MixedHypergraph(3, {{0}}, {})).status ==
          Status::Uncolorable);
    CHECK(decide_colorable(MixedHypergraph(3, {}, {{1}})).status ==
          Status::Uncolorable);
    CHECK(decide_colorable(MixedHypergraph::bi(3, {{0, 1}})).status ==
          Status::Uncolorable);
    // A 2-edge constrains only one side when not shared.
    CHECK(decide_colorable(MixedHypergraph(3, {{0, 1}}, {})).status ==
          Status::Colorable);
    CHECK(decide_colorable(MixedHypergraph(3, {}, {{0, 1}})).status ==
          Status::Colorable);
}

TEST_CASE("two-block chain has exactly three colorings, lexicographically ordered") {
    std::vector<Coloring> cols = enumerate_proper_colorings(make_hk(2));
    REQUIRE(cols.size() == 3);
    CHECK(cols[0].colors == std::vector<int>{0, 0, 1, 1, 1, 0});
    CHECK(cols[1].colors == std::vector<int>{0, 1, 0, 1, 0, 1});
    CHECK(cols[2].colors == std::vector<int>{0, 1, 1, 1, 0, 0});
    for (const Coloring& c : cols) {
        CHECK(c.num_colors == 2);
        CHECK(is_proper(make_hk(2), c));
    }
}

TEST_CASE("enumeration streams in lexicographic order and can stop early") {
    MixedHypergraph h(4, {}, {});
    std::vector<std::vector<int>> seen;
    for_each_proper_coloring(h, -1, [&](const Coloring& c) {
        seen.push_back(c.colors);
        return true;
    });
    CHECK(seen.size() == 15);  // Bell(4)
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    int stopped = 0;
    for_each_proper_coloring(h, -1, [&](const Coloring&) { return ++stopped < 3; });
    CHECK(stopped == 3);
    CHECK(enumerate_proper_colorings(h, 1).size() == 1);   // monochrome only
    CHECK(enumerate_proper_colorings(h, 2).size() == 8);   // Stirling 4,1 + 4,2
}

TEST_CASE("upper chromatic number of small complete families") {
    ChiBar k4 = upper_chromatic_number(make_knlm(4, 3, 3));
    CHECK(k4.value == 2);
    REQUIRE(k4.witness.has_value());
    CHECK(k4.witness->num_colors == 2);
    CHECK(is_proper(make_knlm(4, 3, 3), *k4.witness));

    CHECK_FALSE(upper_chromatic_number(make_knlm(5, 3, 3)).value.has_value());
    CHECK(upper_chromatic_number(make_fano()).value == 3);
}

TEST_CASE("complete family threshold at l = m = 3") {
    for (int n = 3; n <= 8; ++n) {
        Verdict v = decide_colorable(make_knlm(n, 3, 3));
        CHECK((v.status == Status::Uncolorable) == (n >= 5));
        if (v.status == Status::Colorable) {
            REQUIRE(v.witness.has_value());
            CHECK(is_proper(make_knlm(n, 3, 3), *v.witness));
        }
    }
}

TEST_CASE("max_colors caps the palette") {
    MixedHypergraph h(4, {}, {});
    SolveOptions two;
    two.max_colors = 2;
    Verdict v = decide_colorable(h, two);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->num_colors <= 2);
    // The complete 2-subset D-family needs n colors; a cap below that kills it.
    MixedHypergraph rainbow(3, {}, {{0, 1}, {0, 2}, {1, 2}});
    SolveOptions capped;
    capped.max_colors = 2;
    CHECK(decide_colorable(rainbow).status == Status::Colorable);
    CHECK(decide_colorable(rainbow, capped).status == Status::Uncolorable);
}

TEST_CASE("reference oracle agrees with the search on random instances") {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<int> order(1, 6);
    int colorable = 0;
    for (int i = 0; i < 2000; ++i) {
        int n = order(rng);
        std::vector<Edge> c = random_sperner(rng, n, 4);
        std::vector<Edge> d = i % 2 == 0 ? c : random_sperner(rng, n, 4);
        MixedHypergraph h(n, std::move(c), std::move(d));
        Verdict fast = decide_colorable(h);
        Verdict slow = brute_force_oracle(h);
        REQUIRE(fast.status == slow.status);
        if (fast.status == Status::Colorable) {
            ++colorable;
            CHECK(is_proper(h, *fast.witness));
            CHECK(is_proper(h, *slow.witness));
        }
    }
    CHECK(colorable > 200);
    CHECK(colorable < 2000);
}

TEST_CASE("oracle refuses large orders") {
    CHECK_THROWS_AS(brute_force_oracle(MixedHypergraph(13, {}, {})),
                    std::invalid_argument);
}

TEST_CASE("counters are populated") {
    Verdict v = decide_colorable(make_knlm(5, 3, 3));
    CHECK(v.nodes_explored > 0);
    CHECK(v.elapsed_ms >= 0);
    ChiBar cb = upper_chromatic_number(make_fano());
    CHECK(cb.nodes_explored > 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "bihyp/constructions.hpp"

using namespace bihyp;

TEST_CASE("complete families have binomial sizes on both sides") {
    MixedHypergraph k533 = make_knlm(5, 3, 3);
    CHECK(k533.c_edges().size() == 10);
    CHECK(k533.d_edges().size() == 10);
    CHECK(k533.is_bi());
    CHECK(k533.uniformity() == 3);

    MixedHypergraph mixed = make_knlm(5, 2, 3);
    CHECK(mixed.c_edges().size() == 10);
    CHECK(mixed.d_edges().size() == 10);
    CHECK_FALSE(mixed.is_bi());

    CHECK(make_knlm(6, 3, 3).c_edges().size() == 20);
    CHECK_THROWS_AS(make_knlm(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_knlm(4, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_knlm(4, 2, 0), std::invalid_argument);
}

TEST_CASE("two-block chain matches the hand construction exactly") {
    BiHypergraph h2 = make_hk(2);
    CHECK(h2.n() == 6);
    std::vector<Edge> expect = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3},
                                {0, 2, 5}, {1, 2, 4}, {1, 2, 5}, {3, 4, 5}};
    CHECK(h2.edges() == expect);
}

TEST_CASE("chain sizes follow 3k vertices and 7k - 6 edges") {
    for (int k = 2; k <= 5; ++k) {
        BiHypergraph hk = make_hk(k);
        CHECK(hk.n() == 3 * k);
        CHECK(static_cast<int>(hk.edges().size()) == 7 * k - 6);
        CHECK(hk.mixed().uniformity() == 3);
    }
    CHECK_THROWS_AS(make_hk(1), std::invalid_argument);
}

TEST_CASE("chain vertex indexing wraps slots four and five") {
    CHECK(chain_vertex(1, 1) == 0);
    CHECK(chain_vertex(1, 3) == 2);
    CHECK(chain_vertex(2, 1) == 3);
    CHECK(chain_vertex(3, 2) == 7);
    CHECK(chain_vertex(1, 4) == chain_vertex(1, 1));
    CHECK(chain_vertex(2, 5) == chain_vertex(2, 2));
    CHECK_THROWS_AS(chain_vertex(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(chain_vertex(1, 6), std::invalid_argument);
}

TEST_CASE("seven-point plane invariants") {
    BiHypergraph fano = make_fano();
    CHECK(fano.n() == 7);
    REQUIRE(fano.edges().size() == 7);
    MixedHypergraph m = fano.mixed();
    for (int v = 0; v < 7; ++v) CHECK(m.degree(v) == 3);
    const std::vector<Edge>& lines = fano.edges();
    for (size_t a = 0; a < lines.size(); ++a)
        for (size_t b = a + 1; b < lines.size(); ++b) {
            Edge meet;
            std::set_intersection(lines[a].begin(), lines[a].end(),
                                  lines[b].begin(), lines[b].end(),
                                  std::back_inserter(meet));
            CHECK(meet.size() == 1);
        }
}

TEST_CASE("surgery family orders and sizes") {
    // One row per order 6..17.
    const int sizes[] = {10, 11, 13, 17, 19, 20, 24, 25, 27, 31, 33, 34};
    for (int n = 6; n <= 17; ++n) {
        BiHypergraph h = make_muc(n);
        CHECK(h.n() == n);
        CHECK(static_cast<int>(h.edges().size()) == sizes[n - 6]);
        CHECK(h.mixed().uniformity() == 3);
    }
    CHECK_THROWS_AS(make_muc(5), std::invalid_argument);
}

TEST_CASE("surgery family names track the residue") {
    CHECK(muc_family_name(6) == "muc-even");
    CHECK(muc_family_name(7) == "muc-plus1");
    CHECK(muc_family_name(8) == "muc-plus2");
    CHECK(muc_family_name(9) == "muc-odd");
    CHECK(muc_family_name(10) == "muc-plus4");
    CHECK(muc_family_name(11) == "muc-plus5");
    CHECK(muc_family_name(12) == "muc-even");
    CHECK(muc_family_name(17) == "muc-plus5");
    CHECK_THROWS_AS(muc_family_name(5), std::invalid_argument);
}

TEST_CASE("build dispatches by family and validates parameters") {
    ConstructionSpec knlm{.family = "knlm", .n = 5, .l = 3, .m = 3};
    CHECK(build(knlm) == make_knlm(5, 3, 3));

    ConstructionSpec hk{.family = "hk", .k = 3};
    CHECK(build(hk) == make_hk(3).mixed());

    ConstructionSpec fano{.family = "fano"};
    CHECK(build(fano) == make_fano().mixed());

    ConstructionSpec muc{.family = "muc", .n = 8};
    CHECK(build(muc) == make_muc(8).mixed());
    ConstructionSpec named{.family = "muc-plus2", .n = 8};
    CHECK(build(named) == make_muc(8).mixed());

    ConstructionSpec wrong{.family = "muc-even", .n = 8};
    CHECK_THROWS_AS(build(wrong), std::invalid_argument);
    ConstructionSpec unknown{.family = "petersen"};
    CHECK_THROWS_AS(build(unknown), std::invalid_argument);
}

TEST_CASE("provenance captures family and parameters") {
    Provenance p = provenance_of({.family = "knlm", .n = 5, .l = 3, .m = 3});
    CHECK(p.family == "knlm");
    CHECK(p.params.at("n") == 5);
    CHECK(p.params.at("l") == 3);
    CHECK(p.params.at("m") == 3);

    Provenance q = provenance_of({.family = "muc", .n = 9});
    CHECK(q.family == "muc-odd");
    CHECK(q.params.at("n") == 9);

    Provenance h = provenance_of({.family = "hk", .k = 4});
    CHECK(h.params.at("k") == 4);
    CHECK(provenance_of({.family = "fano"}).params.empty());
}

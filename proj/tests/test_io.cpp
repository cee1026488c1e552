#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "bihyp/constructions.hpp"
#include "bihyp/io.hpp"
#include "bihyp/solver.hpp"

using namespace bihyp;

namespace {

std::string tmp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("json round trip is byte identical") {
    MixedHypergraph h = MixedHypergraph::bi(4, {{0, 1, 2}, {1, 2, 3}});
    std::string text = to_json(h);
    ParsedInstance back = from_json(text);
    CHECK(back.h == h);
    CHECK(to_json(back.h) == text);
    CHECK_FALSE(back.provenance.has_value());
}

TEST_CASE("json keeps mixed families and provenance") {
    MixedHypergraph h(5, {{0, 1, 2}}, {{2, 3, 4}, {0, 3, 4}});
    Provenance prov{"knlm", {{"n", 5}, {"l", 3}, {"m", 3}}};
    std::string text = to_json(h, prov);
    ParsedInstance back = from_json(text);
    CHECK(back.h == h);
    REQUIRE(back.provenance.has_value());
    CHECK(back.provenance->family == "knlm");
    CHECK(back.provenance->params.at("l") == 3);
    CHECK(to_json(back.h, back.provenance) == text);
}

TEST_CASE("json rejects malformed input") {
    CHECK_THROWS_AS(from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(from_json("[]"), std::invalid_argument);
    CHECK_THROWS_AS(from_json("{\"edges\": [[0,1,2]]}"), std::invalid_argument);
    CHECK_THROWS_AS(from_json("{\"n\": 3}"), std::invalid_argument);
    CHECK_THROWS_AS(from_json("{\"n\": 3, \"edges\": [[0,1,2]], \"c_edges\": []}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(from_json("{\"n\": 2, \"edges\": [[0,1,2]]}"),
                    std::invalid_argument);
}

TEST_CASE("edge list round trip, bi shorthand") {
    BiHypergraph h = make_hk(2);
    std::string text = to_edge_list(h);
    CHECK(text.substr(0, 4) == "#bi\n");
    ParsedInstance back = from_edge_list(text);
    CHECK(back.h == h.mixed());
    CHECK(to_edge_list(back.h) == text);
}

TEST_CASE("edge list round trip, mixed prefixes") {
    MixedHypergraph h(4, {{0, 1}}, {{1, 2, 3}});
    std::string text = to_edge_list(h);
    ParsedInstance back = from_edge_list(text);
    CHECK(back.h == h);
    CHECK(to_edge_list(back.h) == text);
}

TEST_CASE("edge list parse errors carry line numbers") {
    using Catch = std::invalid_argument;
    CHECK_THROWS_WITH_AS(from_edge_list("4 3\n0 1 x\n"),
                         doctest::Contains("line 2"), Catch);
    CHECK_THROWS_WITH_AS(from_edge_list("nope\n"),
                         doctest::Contains("line 1"), Catch);
    CHECK_THROWS_WITH_AS(from_edge_list("#bi\n4 3\nc 0 1 2\n"),
                         doctest::Contains("line 3"), Catch);
    CHECK_THROWS_WITH_AS(from_edge_list("4 3\n0 1\n"),
                         doctest::Contains("line 2"), Catch);
    CHECK_THROWS_AS(from_edge_list(""), Catch);
    CHECK_THROWS_AS(from_edge_list("4 3\nc 0 1 2\n0 1 2\n"), Catch);
}

TEST_CASE("file io dispatches on extension") {
    MixedHypergraph h = MixedHypergraph::bi(4, {{0, 1, 3}});
    std::string jpath = tmp_file("bihyp_io_test.json");
    std::string epath = tmp_file("bihyp_io_test.edges");
    write_instance_file(jpath, h);
    write_instance_file(epath, h);
    CHECK(read_instance_file(jpath).h == h);
    CHECK(read_instance_file(epath).h == h);
    std::ifstream jin(jpath);
    std::string first;
    std::getline(jin, first);
    CHECK(first == "{");
    std::remove(jpath.c_str());
    std::remove(epath.c_str());
    CHECK_THROWS_AS(read_instance_file(tmp_file("bihyp_io_missing.json")),
                    std::invalid_argument);
}

TEST_CASE("verdict serialization") {
    Verdict v;
    v.status = Status::Colorable;
    v.witness = Coloring::from_labels({0, 0, 1});
    v.nodes_explored = 42;
    std::string text = verdict_to_json(v);
    CHECK(text.find("\"colorable\"") != std::string::npos);
    CHECK(text.find("\"num_colors\": 2") != std::string::npos);
    Verdict u;
    CHECK(verdict_to_json(u).find("\"witness\": null") != std::string::npos);
}

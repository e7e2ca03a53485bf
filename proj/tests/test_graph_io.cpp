#include <doctest.h>

#include <random>

#include "oddcrit/errors.hpp"
#include "oddcrit/graph_io.hpp"
#include "oracles.hpp"

using namespace oddcrit;

TEST_CASE("graph6 known string") {
    // "D?{": n = 5, bits 000000 1111(00) -> edges (0,4) (1,4) (2,4) (3,4)
    const Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));
    CHECK(write_graph6(g) == "D?{");
    CHECK(parse_graph6(">>graph6<<D?{\n") == g);
    CHECK(write_graph6(make_complete(4)) == "C~");
    CHECK(write_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 round trip on random graphs, including the long size form") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rng() % 20;
        const Graph g = oracle::random_graph(n, 0.4, rng);
        const std::string text = write_graph6(g);
        CHECK(parse_graph6(text) == g);
        CHECK(write_graph6(parse_graph6(text)) == text);
    }
    for (std::size_t n : {61u, 62u, 63u, 64u, 100u}) {
        const Graph g = oracle::random_graph(n, 0.3, rng);
        const std::string text = write_graph6(g);
        CHECK((n <= 62 ? text[0] != '~' : text[0] == '~'));
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("graph6 errors report byte offsets") {
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);        // too short
    CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);      // too long
    CHECK_THROWS_AS(parse_graph6("D? {"), ParseError);      // byte out of range
    CHECK_THROWS_AS(parse_graph6("D?|"), ParseError);       // nonzero padding
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    try {
        parse_graph6("D? {");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("edge lists") {
    const Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3 == make_path(3));
    CHECK(parse_edge_list("# comment\n0 1 # trailing\n\n1 2\n") == make_path(3));
    CHECK(parse_edge_list(write_edge_list(make_cycle(5))) == make_cycle(5));
    CHECK_THROWS_AS(parse_edge_list("0 1\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
}

TEST_CASE("format detection and corpora") {
    CHECK(parse_graph("D?{\n") == parse_graph6("D?{"));
    CHECK(parse_graph("0 1\n1 2\n") == make_path(3));
    CHECK(parse_graph("# path\n0 1\n1 2\n") == make_path(3));

    const auto corpus = parse_corpus("# two graphs\nD?{\n\nC~\n");
    REQUIRE(corpus.size() == 2);
    CHECK(corpus[0].id == "line:2");
    CHECK(corpus[1].id == "line:4");
    CHECK(corpus[1].graph == make_complete(4));
    CHECK(parse_corpus("").empty());
    CHECK_THROWS_AS(parse_corpus("D?{\nD?\n"), ParseError);

    const auto single = parse_corpus("0 1\n1 2\n");
    REQUIRE(single.size() == 1);
    CHECK(single[0].graph == make_path(3));
}

TEST_CASE("comment lines before a graph6 string") {
    CHECK(parse_graph("# K5\nD~{\n") == make_complete(5));
    try {
        parse_graph("# x\nD? {\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
        CHECK(std::string(e.what()) == "graph6 byte out of range [63,126] (at byte 6)");
    }
}

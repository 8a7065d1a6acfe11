#include <doctest.h>

#include "fixtures.hpp"
#include "generator.hpp"
#include "pace_io.hpp"

using namespace halin;

namespace {
const char* kK4Gr = "p tw 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
}

TEST_CASE("parse_gr K4") {
    Graph g = parse_gr(kK4Gr);
    CHECK(g.n() == 4);
    CHECK(g.m() == 6);
    CHECK(same_graph(g, testsupport::wheel(3).graph));
}

TEST_CASE("parse_gr comments and blank lines") {
    Graph g = parse_gr("c a comment\np tw 2 1\nc another\n1 2\n\n");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
}

TEST_CASE("parse_gr errors") {
    CHECK_THROWS_AS(parse_gr("1 2\n"), ParseError);                        // edge before header
    CHECK_THROWS_AS(parse_gr("c nothing\n"), ParseError);                  // missing header
    CHECK_THROWS_AS(parse_gr("p tw 2 1\np tw 2 1\n1 2\n"), ParseError);    // duplicate header
    CHECK_THROWS_AS(parse_gr("p tw 3 2\n1 2\n"), ParseError);              // too few edges
    CHECK_THROWS_AS(parse_gr("p tw 3 1\n1 2\n1 3\n"), ParseError);         // too many edges
    CHECK_THROWS_AS(parse_gr("p tw 3 1\n1 4\n"), ParseError);              // id out of range
    CHECK_THROWS_AS(parse_gr("p tw 3 1\n0 1\n"), ParseError);              // ids are 1-based
    CHECK_THROWS_AS(parse_gr("p tw 3 2\n1 2\n2 1\n"), ParseError);         // duplicate edge
    CHECK_THROWS_AS(parse_gr("p tw 3 1\n2 2\n"), ParseError);              // self-loop
    CHECK_THROWS_AS(parse_gr("p tw 3 1\n1 2 3\n"), ParseError);            // malformed edge
}

TEST_CASE("write_gr canonical bytes") {
    CHECK(write_gr(testsupport::wheel(3).graph) == kK4Gr);
    CHECK(write_gr(Graph::build(1, {})) == "p tw 1 0\n");
    // Insertion order does not leak into the output.
    Graph shuffled = Graph::build(4, {{3, 2}, {1, 0}, {3, 1}, {0, 2}, {3, 0}, {2, 1}});
    CHECK(write_gr(shuffled) == kK4Gr);
}

TEST_CASE("gr round-trip over generated instances") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenResult r = generate_halin({4, 60, seed});
        CHECK(same_graph(parse_gr(write_gr(r.graph)), r.graph));
    }
}

TEST_CASE("parse_td single bag") {
    TreeDecomposition td = parse_td("s td 1 4 4\nb 1 1 2 3 4\n");
    CHECK(td.node_count() == 1);
    CHECK(td.width() == 3);
    CHECK(td.edges.empty());
    CHECK(testsupport::bag_vec(td, 0) == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("write_td emits one node edge for two bags") {
    TreeDecomposition td;
    td.add_bag(std::vector<Vertex>{0, 1});
    td.add_bag(std::vector<Vertex>{1, 2});
    td.edges = {{0, 1}};
    std::string text = write_td(td, 3);
    CHECK(text == "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
    CHECK(parse_td(text) == td);
}

TEST_CASE("parse_td accepts any bag order and empty bags") {
    TreeDecomposition td = parse_td("s td 2 1 3\nb 2\nb 1 3\n2 1\n");
    CHECK(testsupport::bag_vec(td, 0) == std::vector<Vertex>{2});
    CHECK(td.bag(1).empty());
    CHECK(td.edges == std::vector<std::pair<std::int32_t, std::int32_t>>{{1, 0}});
}

TEST_CASE("parse_td errors") {
    CHECK_THROWS_AS(parse_td("b 1 1\n"), ParseError);                        // before s line
    CHECK_THROWS_AS(parse_td("s td 1 1 1\nb 2 1\n"), ParseError);            // bag id range
    CHECK_THROWS_AS(parse_td("s td 1 1 1\nb 1 2\n"), ParseError);            // vertex range
    CHECK_THROWS_AS(parse_td("s td 2 1 1\nb 1 1\nb 1 1\n1 2\n"), ParseError);  // redefined
    CHECK_THROWS_AS(parse_td("s td 2 1 1\nb 1 1\nb 2 1\n"), ParseError);     // missing edge
    CHECK_THROWS_AS(parse_td("s td 1 1 1\nb 1 1\n1 1 1\n"), ParseError);     // bad edge line
    CHECK_THROWS_AS(parse_td("s td 0 0\n"), ParseError);                     // short s line
}

TEST_CASE("annotation golden bytes and round-trip") {
    HalinAnnotation a = testsupport::wheel(3).annotation;
    CHECK(write_annotation(a) == "root 1\nt 1 2\nt 1 3\nt 1 4\ny 2 3\ny 2 4\ny 3 4\n");
    CHECK(parse_annotation(write_annotation(a)) == a);

    a.seed = 7;
    std::string with_seed = write_annotation(a);
    CHECK(with_seed == "root 1\nseed 7\nt 1 2\nt 1 3\nt 1 4\ny 2 3\ny 2 4\ny 3 4\n");
    CHECK(parse_annotation(with_seed) == a);
}

TEST_CASE("annotation parse errors") {
    CHECK_THROWS_AS(parse_annotation("t 1 2\n"), ParseError);                   // no root
    CHECK_THROWS_AS(parse_annotation("root 1\nroot 2\n"), ParseError);          // two roots
    CHECK_THROWS_AS(parse_annotation("root 1\nt 1 2\ny 2 1\n"), ParseError);    // overlap
    CHECK_THROWS_AS(parse_annotation("root 1\nt 1 2\nt 2 1\n"), ParseError);    // dup edge
    CHECK_THROWS_AS(parse_annotation("root 1\nq 1 2\n"), ParseError);           // unknown tag
    CHECK_THROWS_AS(parse_annotation("root 1\nt 0 2\n"), ParseError);           // id < 1
}

TEST_CASE("annotation round-trip over generated instances") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenResult r = generate_halin({4, 60, seed});
        CHECK(parse_annotation(write_annotation(r.annotation)) == r.annotation);
    }
}

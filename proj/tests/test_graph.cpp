#include "tangles/graph.hpp"

#include "tangles/errors.hpp"

#include "doctest.h"

#include <sstream>

using namespace tangles;

TEST_SUITE_BEGIN("graph");

TEST_CASE("edge ids follow the canonical sorted order") {
    Graph g = Graph::from_edges(4, {{3, 4}, {1, 3}, {2, 1}});
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edge(1) == std::pair{1, 2});
    CHECK(g.edge(2) == std::pair{1, 3});
    CHECK(g.edge(3) == std::pair{3, 4});
    CHECK(g.edge_id(4, 3) == 3);
    CHECK(g.edge_id(2, 3) == 0);
    CHECK(g.adjacent(1, 2));
    CHECK(g.degree(3) == 2);
}

TEST_CASE("loops and duplicate edges are rejected") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), ParseError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {2, 1}}), ParseError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{1, 3}}), ParseError);
}

TEST_CASE("text round trip is canonical and bit-stable") {
    std::string text = "# a comment\n4 3\n3 4\n1 3\n\n2 1\n";
    Graph g = parse_graph_text(text);
    std::string canonical = write_graph(g);
    CHECK(canonical == "4 3\n1 2\n1 3\n3 4\n");
    CHECK(write_graph(parse_graph_text(canonical)) == canonical);
}

TEST_CASE("parse failures") {
    CHECK_THROWS_AS(parse_graph_text(""), ParseError);
    CHECK_THROWS_AS(parse_graph_text("2 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("nonsense\n"), ParseError);
}

TEST_CASE("named generators: shapes") {
    Graph k6 = named_graph("complete", {6});
    CHECK(k6.vertex_count() == 6);
    CHECK(k6.edge_count() == 15);

    Graph p4 = named_graph("path", {4});
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);

    Graph c5 = named_graph("cycle", {5});
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 1; v <= 5; ++v) CHECK(c5.degree(v) == 2);

    Graph grid = named_graph("grid", {5, 5});
    CHECK(grid.vertex_count() == 25);
    CHECK(grid.edge_count() == 40);

    Graph sk4 = named_graph("subdivided-k4", {});
    CHECK(sk4.vertex_count() == 10);
    CHECK(sk4.edge_count() == 12);
    int degree3 = 0, degree2 = 0;
    for (int v = 1; v <= 10; ++v) {
        if (sk4.degree(v) == 3) ++degree3;
        if (sk4.degree(v) == 2) ++degree2;
    }
    CHECK(degree3 == 4);
    CHECK(degree2 == 6);

    Graph fig3 = named_graph("fig3", {});
    CHECK(fig3.vertex_count() == 8);
    CHECK(fig3.edge_count() == 10);
    // The pendant edge, the triangle, and the dense block.
    CHECK(fig3.edge_id(3, 6) != 0);
    CHECK(fig3.degree(6) == 1);
    CHECK(fig3.edge_id(2, 7) != 0);
    CHECK(fig3.edge_id(7, 8) != 0);
    CHECK(fig3.edge_id(2, 8) != 0);
    CHECK(fig3.edge_id(4, 5) != 0);
}

TEST_CASE("named generator errors") {
    CHECK_THROWS_AS(named_graph("moebius", {3}), PreconditionError);
    CHECK_THROWS_AS(named_graph("grid", {0, 5}), PreconditionError);
    CHECK_THROWS_AS(named_graph("path", {}), PreconditionError);
}

TEST_CASE("hexgrid: two rings give the cubic 19-face patch") {
    Graph h = named_graph("hexgrid", {2});
    CHECK(h.vertex_count() == 36);
    CHECK(h.edge_count() == 54);
    for (int v = 1; v <= h.vertex_count(); ++v) CHECK(h.degree(v) == 3);
    // Connected planar: bounded faces = m - n + 1.
    CHECK(is_connected(h));
    CHECK(h.edge_count() - h.vertex_count() + 1 == 19);
}

TEST_CASE("hexgrid: one ring") {
    Graph h = named_graph("hexgrid", {1});
    CHECK(h.vertex_count() == 12);
    CHECK(h.edge_count() == 18);
    CHECK(h.edge_count() - h.vertex_count() + 1 == 7);
    for (int v = 1; v <= h.vertex_count(); ++v) CHECK(h.degree(v) == 3);
}

TEST_CASE("components and induced subgraphs") {
    Graph g = Graph::from_edges(6, {{1, 2}, {2, 3}, {4, 5}});
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == IdSet::of({1, 2, 3}));
    CHECK(comps[1] == IdSet::of({4, 5}));
    CHECK(comps[2] == IdSet::of({6}));
    CHECK(!is_connected(g));

    auto sub = induced_subgraph(g, IdSet::of({2, 3, 4, 5}));
    CHECK(sub.graph.vertex_count() == 4);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.to_parent[1] == 2);
    CHECK(sub.from_parent[5] == 4);
}

TEST_CASE("neighborhood") {
    Graph g = named_graph("fig3", {});
    CHECK(g.neighborhood(IdSet::of({7, 8})) == IdSet::of({2}));
    CHECK(g.neighborhood(IdSet::of({6})) == IdSet::of({3}));
    CHECK(g.neighborhood(g.vertex_set()) == IdSet{});
}

TEST_SUITE_END();

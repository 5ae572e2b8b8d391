#include "tangles/bramble.hpp"

#include "oracles.hpp"
#include "tangles/errors.hpp"

#include "doctest.h"

#include <random>

using namespace tangles;

TEST_SUITE_BEGIN("brambles");

namespace {

Subgraph induced_member(const Graph& g, const IdSet& verts) {
    IdSet edges;
    for (int id = 1; id <= g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        if (verts.contains(u) && verts.contains(v)) edges.add(id);
    }
    return {verts, edges};
}

std::vector<Subgraph> k4_triangles(const Graph& k4) {
    std::vector<Subgraph> out;
    for (int skip = 1; skip <= 4; ++skip) {
        IdSet verts = k4.vertex_set();
        verts.remove(skip);
        out.push_back(induced_member(k4, verts));
    }
    return out;
}

} // namespace

TEST_CASE("family validation") {
    Graph g = named_graph("fig3", {});
    CHECK_THROWS_AS(make_family(g, {Subgraph{}}), PreconditionError);
    // Disconnected member: the two ends of the long block without the middle.
    CHECK_THROWS_AS(make_family(g, {induced_member(g, IdSet::of({1, 4}))}), PreconditionError);
    CHECK_NOTHROW(make_family(g, {induced_member(g, IdSet::of({2, 7, 8}))}));
}

TEST_CASE("touching modes") {
    Graph g = named_graph("fig3", {});
    auto a = induced_member(g, IdSet::of({2, 7, 8}));
    auto b = induced_member(g, IdSet::of({1, 2, 3}));
    CHECK(touches(g, {a, b}, TouchMode::pairwise)); // share v2

    Graph grid = named_graph("grid", {3, 3});
    auto row1 = induced_member(grid, IdSet::of({1, 2, 3}));
    auto row3 = induced_member(grid, IdSet::of({7, 8, 9}));
    CHECK(!touches(grid, {row1, row3}, TouchMode::pairwise));

    Graph k4 = named_graph("complete", {4});
    CHECK(touches(k4, k4_triangles(k4), TouchMode::triplewise));
}

TEST_CASE("touching is monotone under member growth") {
    Graph k4 = named_graph("complete", {4});
    auto triangles = k4_triangles(k4);
    // Grow every member to the full vertex set: still touching.
    std::vector<Subgraph> grown;
    for (std::size_t i = 0; i < triangles.size(); ++i)
        grown.push_back(induced_member(k4, k4.vertex_set()));
    CHECK(touches(k4, grown, TouchMode::triplewise));

    // Random touching families: growing one member by its neighbourhood
    // never breaks an established touch.
    std::mt19937 rng(31);
    int grown_cases = 0;
    for (int trial = 0; trial < 40 && grown_cases < 25; ++trial) {
        Graph g = oracles::random_graph(rng, 7, 9);
        for (const auto& t : enumerate_graph_tangles(g, 2)) {
            SubgraphFamily family = touching_family_from_tangle(g, t);
            for (auto mode : {TouchMode::pairwise, TouchMode::triplewise}) {
                REQUIRE(touches(g, family.members, mode));
                for (std::size_t i = 0; i < family.members.size(); ++i) {
                    IdSet bigger =
                        family.members[i].verts | g.neighborhood(family.members[i].verts);
                    auto grown_family = family.members;
                    grown_family[i] = induced_member(g, bigger);
                    CHECK(touches(g, grown_family, mode));
                    ++grown_cases;
                }
            }
        }
    }
    CHECK(grown_cases >= 25);
}

TEST_CASE("minimum hitting sets") {
    Graph grid = named_graph("grid", {3, 3});
    SubgraphFamily rows = make_family(
        grid, {induced_member(grid, IdSet::of({1, 2, 3})),
               induced_member(grid, IdSet::of({4, 5, 6})),
               induced_member(grid, IdSet::of({7, 8, 9}))});
    CHECK(min_hitting_set(grid, rows) == 3);

    SubgraphFamily whole = make_family(grid, {induced_member(grid, grid.vertex_set())});
    CHECK(min_hitting_set(grid, whole) == 1);

    Graph k4 = named_graph("complete", {4});
    SubgraphFamily triangles = make_family(k4, k4_triangles(k4));
    CHECK(min_hitting_set(k4, triangles) == 2);

    CHECK_THROWS_AS(min_hitting_set(k4, SubgraphFamily{}), PreconditionError);
}

TEST_CASE("component family from a tangle") {
    Graph g = named_graph("fig3", {});
    GraphTangle t = block_tangle(g, IdSet::of({2, 7, 8}), 2);
    SubgraphFamily family = touching_family_from_tangle(g, t);
    CHECK(touches(g, family.members, TouchMode::triplewise));
    CHECK(min_hitting_set(g, family) == 2);

    GraphTangle order1 = enumerate_graph_tangles(g, 1).at(0);
    SubgraphFamily trivial = touching_family_from_tangle(g, order1);
    REQUIRE(trivial.members.size() == 1);
    CHECK(trivial.members[0].verts == g.vertex_set());
    CHECK(min_hitting_set(g, trivial) == 1);

    Graph k6 = named_graph("complete", {6});
    GraphTangle k6t = block_tangle(k6, k6.vertex_set(), 4);
    SubgraphFamily k6f = touching_family_from_tangle(k6, k6t);
    CHECK(min_hitting_set(k6, k6f) >= 4);
}

TEST_CASE("tangle from a touching family") {
    Graph k4 = named_graph("complete", {4});
    SubgraphFamily triangles = make_family(k4, k4_triangles(k4));
    GraphTangle t = tangle_from_family(k4, triangles, 2);
    CHECK(check_graph_tangle(k4, t).passed);

    Graph g = named_graph("fig3", {});
    SubgraphFamily whole = make_family(g, {induced_member(g, g.vertex_set())});
    GraphTangle order1 = tangle_from_family(g, whole, 1);
    CHECK(order1.members == enumerate_graph_tangles(g, 1).at(0).members);

    // Hitting number 1 cannot reach order 2.
    CHECK_THROWS_AS(tangle_from_family(g, whole, 2), PreconditionError);
}

TEST_CASE("round trip through the component family") {
    Graph g = named_graph("fig3", {});
    for (const auto& t : enumerate_graph_tangles(g, 2)) {
        SubgraphFamily family = touching_family_from_tangle(g, t);
        GraphTangle back = tangle_from_family(g, family, t.order);
        CHECK(back.members == t.members);
    }
}

TEST_SUITE_END();

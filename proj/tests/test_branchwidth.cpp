#include "tangles/branch_decomposition.hpp"

#include "oracles.hpp"
#include "tangles/errors.hpp"
#include "tangles/graph_tangle.hpp"

#include "doctest.h"

using namespace tangles;

TEST_SUITE_BEGIN("branch decompositions");

namespace {

// The example branch decomposition of the fig3 graph: a cubic tree whose ten
// leaves carry the edges, drawn with three subtrees under the root.
BranchDecomposition fig3_example_decomposition(const Graph& g) {
    BranchDecomposition d;
    d.tree.node_count = 18;
    // Internal nodes 0..7, leaves 8..17.
    d.tree.edges = {{0, 1}, {0, 15}, {0, 4}, {1, 8},  {1, 2},  {2, 3},
                    {2, 11}, {3, 9},  {3, 10}, {4, 17}, {4, 5},  {5, 16},
                    {5, 6},  {6, 7},  {6, 14}, {7, 12}, {7, 13}};
    auto id = [&](int u, int v) { return g.edge_id(u, v); };
    d.leaf_map = {{8, id(3, 6)},  {9, id(1, 3)},  {10, id(1, 2)}, {11, id(2, 3)},
                  {12, id(2, 7)}, {13, id(7, 8)}, {14, id(2, 8)}, {15, id(3, 5)},
                  {16, id(2, 4)}, {17, id(4, 5)}};
    return d;
}

} // namespace

TEST_CASE("the fig3 example decomposition has width 2") {
    Graph g = named_graph("fig3", {});
    auto sys = ConnectivitySystem::vertex_connectivity(g);
    BranchDecomposition d = fig3_example_decomposition(g);
    REQUIRE(d.tree.is_cubic_tree());
    CHECK(decomposition_width(sys, d) == 2);
}

TEST_CASE("width validates the tree shape") {
    Graph g = named_graph("path", {4});
    auto sys = ConnectivitySystem::vertex_connectivity(g);
    BranchDecomposition bad;
    bad.tree.node_count = 4;
    bad.tree.edges = {{0, 1}, {1, 2}, {2, 3}}; // a path has degree-2 nodes
    bad.leaf_map = {{0, 1}, {3, 2}};
    CHECK_THROWS_AS(decomposition_width(sys, bad), PreconditionError);
}

TEST_CASE("branch width of the named examples") {
    Graph fig3 = named_graph("fig3", {});
    auto r1 = branch_width(ConnectivitySystem::vertex_connectivity(fig3));
    CHECK(r1.width == 2);

    Graph k6 = named_graph("complete", {6});
    auto r2 = branch_width(ConnectivitySystem::vertex_connectivity(k6));
    CHECK(r2.width == 4);

    Graph grid = named_graph("grid", {3, 3});
    auto r3 = branch_width(ConnectivitySystem::vertex_connectivity(grid));
    CHECK(r3.width == 3);

    Graph p4 = named_graph("path", {4});
    auto r4 = branch_width(ConnectivitySystem::vertex_connectivity(p4));
    CHECK(r4.width == 2);
}

TEST_CASE("witness decomposition reproduces the reported width") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracles::random_graph(rng, 6, 9);
        auto sys = ConnectivitySystem::vertex_connectivity(g);
        auto result = branch_width(sys);
        if (g.edge_count() <= 1) {
            CHECK(result.width == 0);
            continue;
        }
        CHECK(decomposition_width(sys, result.decomposition) == result.width);
    }
}

TEST_CASE("an explicit decomposition never beats the optimum") {
    Graph g = named_graph("fig3", {});
    auto sys = ConnectivitySystem::vertex_connectivity(g);
    auto best = branch_width(sys);
    CHECK(best.width <= decomposition_width(sys, fig3_example_decomposition(g)));
}

TEST_CASE("degenerate universes") {
    Graph k2 = Graph::from_edges(2, {{1, 2}});
    auto sys1 = ConnectivitySystem::vertex_connectivity(k2); // one element
    auto r1 = branch_width(sys1);
    CHECK(r1.width == 0);
    CHECK(r1.decomposition.tree.node_count == 1);
    CHECK(decomposition_width(sys1, r1.decomposition) == 0);

    Graph p3 = named_graph("path", {3}); // two elements
    auto sys2 = ConnectivitySystem::vertex_connectivity(p3);
    auto r2 = branch_width(sys2);
    CHECK(r2.width == 1);
    CHECK(r2.decomposition.tree.node_count == 2);
}

TEST_CASE("budget refusal above the DP limit") {
    Graph big = named_graph("grid", {5, 5});
    CHECK_THROWS_AS(branch_width(ConnectivitySystem::vertex_connectivity(big)), BudgetError);
}

TEST_CASE("treewidth of the named examples") {
    CHECK(treewidth(named_graph("complete", {6})) == 5);
    CHECK(treewidth(named_graph("path", {4})) == 1);
    CHECK(treewidth(named_graph("cycle", {4})) == 2);
    CHECK(treewidth(named_graph("grid", {3, 3})) == 3);
    CHECK(treewidth(Graph::from_edges(3, {})) == 0);
    CHECK_THROWS_AS(treewidth(named_graph("grid", {4, 4}), 15), BudgetError);
}

TEST_CASE("known tangles are branch width lower bounds") {
    // A tangle of order k certifies bw >= k for the vertex system.
    Graph fig3 = named_graph("fig3", {});
    GraphTangle block = block_tangle(fig3, IdSet::of({2, 7, 8}), 2);
    CHECK(branch_width(ConnectivitySystem::vertex_connectivity(fig3)).width >= block.order);

    Graph k6 = named_graph("complete", {6});
    GraphTangle clique = clique_tangle(k6, k6.vertex_set(), 4);
    CHECK(branch_width(ConnectivitySystem::vertex_connectivity(k6)).width >= clique.order);

    Graph grid = named_graph("grid", {3, 3});
    GraphTangle rows = grid_tangle(grid, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(branch_width(ConnectivitySystem::vertex_connectivity(grid)).width >= rows.order);
}

TEST_CASE("duality on the named examples") {
    auto fig3 = verify_duality(ConnectivitySystem::vertex_connectivity(named_graph("fig3", {})));
    CHECK(fig3.branch_width == 2);
    CHECK(fig3.max_tangle_order == 2);
    CHECK(fig3.equal);

    auto k6 = verify_duality(ConnectivitySystem::vertex_connectivity(named_graph("complete", {6})));
    CHECK(k6.branch_width == 4);
    CHECK(k6.equal);

    auto c5 = verify_duality(ConnectivitySystem::cut_rank(named_graph("cycle", {5})));
    CHECK(c5.equal);
}

TEST_CASE("inequality chain on the tight examples") {
    auto k6 = verify_inequalities(named_graph("complete", {6}));
    CHECK(k6.branch_width == 4);
    CHECK(k6.treewidth == 5);
    CHECK(k6.holds);
    CHECK(k6.right_tight);
    CHECK(!k6.left_tight);

    auto p4 = verify_inequalities(named_graph("path", {4}));
    CHECK(p4.branch_width == 2);
    CHECK(p4.treewidth == 1);
    CHECK(p4.holds);
    CHECK(p4.left_tight);
}

TEST_SUITE_END();

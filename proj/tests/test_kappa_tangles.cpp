#include "tangles/kappa_tangle.hpp"

#include "oracles.hpp"
#include "tangles/errors.hpp"

#include "doctest.h"

using namespace tangles;

TEST_SUITE_BEGIN("kappa tangles");

TEST_CASE("fig3 has two order-2 kappa tangles") {
    Graph g = named_graph("fig3", {});
    auto sys = ConnectivitySystem::vertex_connectivity(g);
    auto tangles = enumerate_kappa_tangles(sys, 2);
    CHECK(tangles.size() == 2);
    for (const auto& t : tangles) CHECK(check_kappa_tangle(sys, t).passed);
}

TEST_CASE("a single edge has no order-1 kappa tangle") {
    Graph k2 = Graph::from_edges(2, {{1, 2}});
    auto sys = ConnectivitySystem::vertex_connectivity(k2);
    CHECK(enumerate_kappa_tangles(sys, 1).empty());
    CHECK(max_tangle_order(sys) == 0);
}

TEST_CASE("stars have no order-2 kappa tangle") {
    Graph star = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
    auto sys = ConnectivitySystem::vertex_connectivity(star);
    CHECK(enumerate_kappa_tangles(sys, 2).empty());
    CHECK(!enumerate_kappa_tangles(sys, 1).empty());
}

TEST_CASE("order-0 tangle is the empty family") {
    Graph g = named_graph("path", {3});
    auto sys = ConnectivitySystem::vertex_connectivity(g);
    auto zero = enumerate_kappa_tangles(sys, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].members.empty());
}

TEST_CASE("max tangle order on the named examples") {
    CHECK(max_tangle_order(ConnectivitySystem::vertex_connectivity(
              named_graph("complete", {6}))) == 4);
    CHECK(max_tangle_order(ConnectivitySystem::vertex_connectivity(
              named_graph("fig3", {}))) == 2);
}

TEST_CASE("axiom checker reports T2 on an empty-member family") {
    Graph k2 = Graph::from_edges(2, {{1, 2}});
    auto sys = ConnectivitySystem::vertex_connectivity(k2);
    KappaTangle t;
    t.order = 1;
    t.members = {0}; // the empty subset as a member
    auto report = check_kappa_tangle(sys, t);
    REQUIRE(!report.passed);
    bool has_t2 = false;
    for (const auto& v : report.violations)
        if (v.axiom == KappaAxiom::T2) has_t2 = true;
    CHECK(has_t2);
}

TEST_CASE("K6 order-4 kappa tangle passes and translates to the clique tangle") {
    Graph k6 = named_graph("complete", {6});
    auto sys = ConnectivitySystem::vertex_connectivity(k6);
    auto tangles = enumerate_kappa_tangles(sys, 4);
    REQUIRE(!tangles.empty());
    for (const auto& t : tangles) {
        CHECK(check_kappa_tangle(sys, t).passed);
        GraphTangle gt = kappa_to_graph_tangle(k6, t);
        CHECK(gt.members == oriented_toward(k6, k6.vertex_set(), 4).members);
    }
}

TEST_CASE("translations on fig3 match the block tangles") {
    Graph g = named_graph("fig3", {});
    auto sys = ConnectivitySystem::vertex_connectivity(g);
    auto kappa2 = enumerate_kappa_tangles(sys, 2);
    REQUIRE(kappa2.size() == 2);
    std::vector<std::vector<Separation>> translated;
    for (const auto& t : kappa2) translated.push_back(kappa_to_graph_tangle(g, t).members);
    auto big = block_tangle(g, IdSet::of({1, 2, 3, 4, 5}), 2).members;
    auto triangle = block_tangle(g, IdSet::of({2, 7, 8}), 2).members;
    CHECK(std::count(translated.begin(), translated.end(), big) == 1);
    CHECK(std::count(translated.begin(), translated.end(), triangle) == 1);
}

TEST_CASE("the fig3 bridge tangle is exceptional case (iii)") {
    Graph g = named_graph("fig3", {});
    GraphTangle bridge = block_tangle(g, IdSet::of({3, 6}), 2);
    auto result = graph_to_kappa_tangle(g, bridge);
    CHECK(result.kind == ExceptionalKind::pendant_or_isolated_edge);
    CHECK(result.witness == g.edge_id(3, 6));
    CHECK(!result.tangle.has_value());
}

TEST_CASE("non-exceptional fig3 tangles translate to valid kappa tangles") {
    Graph g = named_graph("fig3", {});
    for (IdSet block : {IdSet::of({2, 7, 8}), IdSet::of({1, 2, 3, 4, 5})}) {
        auto result = graph_to_kappa_tangle(g, block_tangle(g, block, 2));
        CHECK(result.kind == ExceptionalKind::none);
        REQUIRE(result.tangle.has_value());
        auto sys = ConnectivitySystem::vertex_connectivity(g);
        CHECK(check_kappa_tangle(sys, *result.tangle).passed);
    }
}

TEST_CASE("isolated vertex gives exceptional case (i)") {
    // A triangle plus an isolated vertex: the order-1 tangle pointing at the
    // isolated vertex cannot translate.
    Graph g = Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}});
    auto tangles = enumerate_graph_tangles(g, 1);
    REQUIRE(tangles.size() == 2);
    int exceptional = 0, fine = 0;
    for (const auto& t : tangles) {
        auto result = graph_to_kappa_tangle(g, t);
        if (result.kind == ExceptionalKind::isolated_vertex) {
            CHECK(result.witness == 4);
            ++exceptional;
        } else {
            CHECK(result.kind == ExceptionalKind::none);
            ++fine;
        }
    }
    CHECK(exceptional == 1);
    CHECK(fine == 1);
}

TEST_CASE("isolated edge gives exceptional case (ii)") {
    Graph g = Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {4, 5}});
    auto tangles = enumerate_graph_tangles(g, 1);
    REQUIRE(tangles.size() == 2);
    int exceptional = 0;
    for (const auto& t : tangles) {
        auto result = graph_to_kappa_tangle(g, t);
        if (result.kind == ExceptionalKind::isolated_edge) {
            CHECK(result.witness == g.edge_id(4, 5));
            ++exceptional;
        }
    }
    CHECK(exceptional == 1);
}

TEST_CASE("kappa tangle truncation stays a tangle") {
    Graph k6 = named_graph("complete", {6});
    auto sys = ConnectivitySystem::vertex_connectivity(k6);
    for (const auto& t : enumerate_kappa_tangles(sys, 4)) {
        for (int smaller = 1; smaller < t.order; ++smaller) {
            KappaTangle cut;
            cut.order = smaller;
            for (std::uint64_t m : t.members)
                if (sys.value(m) < smaller) cut.members.push_back(m);
            CHECK(check_kappa_tangle(sys, cut).passed);
        }
    }
}

TEST_SUITE_END();

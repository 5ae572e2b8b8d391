#pragma once

#include "tangles/errors.hpp"
#include "tangles/graph.hpp"
#include "tangles/graph_tangle.hpp"

#include <cstdint>
#include <vector>

namespace tangles {

// A connected subgraph of the host graph, stored with explicit edges so the
// edge clause of touching is decidable as written.
struct Subgraph {
    IdSet verts;
    IdSet edges;
};

struct SubgraphFamily {
    std::vector<Subgraph> members;
};

// Validates members: nonempty, inside g, edges within verts, connected.
SubgraphFamily make_family(const Graph& g, std::vector<Subgraph> members);

enum class TouchMode { pairwise, triplewise };

// Subgraphs touch if they share a vertex or some graph edge has an
// endvertex in every one of them. Modes quantify over all pairs / triples
// (with repetition).
bool touches(const Graph& g, const std::vector<Subgraph>& members, TouchMode mode);

// Exact minimum vertex set meeting every member; branch and bound.
int min_hitting_set(const Graph& g, const SubgraphFamily& family,
                    std::uint64_t budget = kDefaultWorkBudget);

// The big components C(T, S) over all S with |S| < ord(T), deduplicated.
// Checks the two guarantees: the family touches triplewise and its hitting
// number is at least ord(T).
SubgraphFamily touching_family_from_tangle(const Graph& g, const GraphTangle& t,
                                           std::uint64_t budget = kDefaultWorkBudget);

// The separations of order < k whose big side strictly contains a member
// (away from the small side). Requires triplewise touching and hitting
// number >= k; the result is axiom-checked.
GraphTangle tangle_from_family(const Graph& g, const SubgraphFamily& family, int order,
                               std::uint64_t budget = kDefaultWorkBudget);

} // namespace tangles

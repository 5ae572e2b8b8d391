#pragma once

#include "tangles/errors.hpp"
#include "tangles/graph.hpp"
#include "tangles/separation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tangles {

// A tangle of order k on a graph: a consistent orientation of every
// separation of order < k. `members` holds the chosen (A, B) orientations,
// canonically sorted. The axioms:
//   GT0  every member has order < k
//   GT1  every separation of order < k is oriented one way or the other
//   GT2  no three members have A1 u A2 u A3 = G (vertices and edges)
//   GT3  no member has V(A) = V(G)
struct GraphTangle {
    int order = 0;
    std::vector<Separation> members;

    bool contains(const Separation& s) const;
};

enum class GraphAxiom { GT0, GT1, GT2, GT3 };

const char* to_string(GraphAxiom a);

struct GraphAxiomViolation {
    GraphAxiom axiom;
    // GT0/GT3: the offending member. GT1: the unoriented separation.
    // GT2: a member triple whose A-sides cover G.
    std::vector<Separation> witness;
};

struct AxiomReport {
    bool passed = true;
    std::vector<GraphAxiomViolation> violations;
    std::string summary() const;
};

// Checks GT0-GT3 against the full enumeration of order-<k separations;
// reports the first-found witness per violated axiom. Member separations
// must be structurally valid, else PreconditionError.
AxiomReport check_graph_tangle(const Graph& g, const GraphTangle& t,
                               std::uint64_t budget = kDefaultWorkBudget);

// All tangles of order exactly `order`, deterministically ordered. Searches
// over per-separator component assignments (each tangle points every small
// separator at one outside component) with monotonicity propagation and
// incremental GT2 pruning on the closed-component members.
std::vector<GraphTangle> enumerate_graph_tangles(const Graph& g, int order,
                                                 std::uint64_t budget = kDefaultWorkBudget);

// The orientation family of all order-<k separations with x inside the big
// side. No hypothesis check; used both by block_tangle and by tests that
// exercise the failure boundary.
GraphTangle oriented_toward(const Graph& g, const IdSet& x, int order,
                            std::uint64_t budget = kDefaultWorkBudget);

// oriented_toward with the hypotheses that guarantee a tangle: x must be
// (k-1)-inseparable with |x| > 3(k-1)/2. Checks the axioms after building.
GraphTangle block_tangle(const Graph& g, const IdSet& x, int order,
                         std::uint64_t budget = kDefaultWorkBudget);

// For a 2-block x with |x| = 3, builds the order-3 family oriented toward x
// and returns the GT2 violation assembled from the three pair-separations
// (A12, A13, A23) that cover G.
AxiomReport improper_2block_counterexample(const Graph& g, const IdSet& x,
                                           std::uint64_t budget = kDefaultWorkBudget);

// The unique component C of G \ s such that members with separator inside s
// are exactly the separations with C in the big side. Requires |s| < order;
// fails loudly (std::logic_error) if uniqueness breaks.
IdSet big_component(const Graph& g, const GraphTangle& t, const IdSet& s);

// Intersection of the big-side vertex sets over all members; asserts the
// same value arises from minimal members only.
IdSet tangle_core(const Graph& g, const GraphTangle& t);

// Members of order < new_order; requires 1 <= new_order <= ord(t).
GraphTangle truncate(const GraphTangle& t, int new_order);

// True iff smaller's members all belong to t.
bool is_extension(const GraphTangle& t, const GraphTangle& smaller);

// Members (A, B) minimal by big side. Asserts the structure that minimality
// forces: B minus the separator is one connected component C with
// separator = N(C) and E(B) = the edges incident to C.
std::vector<Separation> minimal_separations(const Graph& g, const GraphTangle& t);

struct BlockRestriction {
    IdSet block;              // W, in parent vertex ids
    Graph graph;              // G[W], relabelled 1..|W|
    std::vector<int> to_parent;
    GraphTangle tangle;       // T[W], on `graph`
};

// For an order-3 tangle: W = core of the order-2 truncation; projects the
// tangle onto G[W] and checks it is a tangle there with the same core.
BlockRestriction restrict_to_block(const Graph& g, const GraphTangle& t,
                                   std::uint64_t budget = kDefaultWorkBudget);

struct TangleBlockPair {
    GraphTangle tangle;
    IdSet block;
};

// Pairs every order-k tangle (k <= 3) with its core and verifies the map is
// a bijection onto the 0-blocks / 1-blocks / proper 2-blocks, with
// T = oriented_toward(core). Aborts with std::logic_error on any mismatch.
std::vector<TangleBlockPair> correspondence(const Graph& g, int order,
                                            std::uint64_t budget = kDefaultWorkBudget);

// Example constructions; each verifies its hypothesis, builds the family,
// and checks the axioms before returning.
GraphTangle cycle_tangle(const Graph& g, const std::vector<int>& cycle,
                         std::uint64_t budget = kDefaultWorkBudget);
GraphTangle clique_tangle(const Graph& g, const IdSet& clique, int order,
                          std::uint64_t budget = kDefaultWorkBudget);
GraphTangle grid_tangle(const Graph& g, const std::vector<std::vector<int>>& rows,
                        std::uint64_t budget = kDefaultWorkBudget);

} // namespace tangles

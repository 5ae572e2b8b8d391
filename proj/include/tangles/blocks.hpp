#pragma once

#include "tangles/graph.hpp"
#include "tangles/idset.hpp"

#include <utility>
#include <vector>

namespace tangles {

// Minimum number of vertices (excluding u, v) whose removal disconnects u
// from v. Unit-capacity vertex-split max flow. Requires u != v, nonadjacent.
int min_vertex_cut(const Graph& g, int u, int v);

// No separation of order <= k splits u from v: adjacent pairs are never
// split; nonadjacent pairs are split iff min_vertex_cut <= k.
bool pair_k_inseparable(const Graph& g, int u, int v, int k);

// |x| > k and no separation of order <= k splits x; decided pairwise.
bool is_k_inseparable(const Graph& g, const IdSet& x, int k);

struct BlockSet {
    int k = 0;
    std::vector<IdSet> members; // canonically sorted, mutually incomparable
};

// All inclusionwise maximal k-inseparable vertex sets: maximal cliques of
// the pairwise inseparability relation, filtered to size > k.
BlockSet k_blocks(const Graph& g, int k);

struct Torso {
    IdSet base;
    std::vector<std::pair<int, int>> real_edges;
    std::vector<std::pair<int, int>> virtual_edges;
    // Per virtual edge, a witness path through the outside component whose
    // interior avoids the base (topological-subgraph witness).
    std::vector<std::vector<int>> virtual_paths;
    bool proper = false; // set for triconnected components: order >= 4

    int order() const { return base.size(); }
};

// Induced subgraph on x plus a virtual edge {v, w} for every component C of
// G \ x with v, w in N(C), v != w, vw not already an edge.
Torso torso(const Graph& g, const IdSet& x);

// Torsos of all 2-blocks, flagged proper iff order >= 4. Checks the
// attachment bound |N(C)| <= 2 for every outside component and fails loudly
// if it does not hold (it must, by maximality of 2-blocks).
std::vector<Torso> triconnected_components(const Graph& g);

} // namespace tangles

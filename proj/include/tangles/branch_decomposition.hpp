#pragma once

#include "tangles/connectivity.hpp"
#include "tangles/errors.hpp"
#include "tangles/graph.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tangles {

// Tree whose internal nodes all have degree exactly 3. Nodes are 0-based.
struct CubicTree {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> leaves() const;
    bool is_cubic_tree() const;
    // Leaves in the component of `toward` after removing edge {away, toward}.
    std::vector<int> leaves_toward(int away, int toward) const;
};

// Cubic tree with a bijection from leaves to universe elements 1..N.
// Degenerate universes: size 0 or 1 use a single node and have width 0;
// size 2 uses a single tree edge.
struct BranchDecomposition {
    CubicTree tree;
    std::vector<std::pair<int, int>> leaf_map; // (leaf node, element)

    std::uint64_t side_mask(int away, int toward) const;
};

// Maximum kappa over the oriented tree edges. Validates the shape and the
// leaf bijection.
int decomposition_width(const ConnectivitySystem& sys, const BranchDecomposition& d);

struct BranchWidthResult {
    int width = 0;
    BranchDecomposition decomposition;
};

// Exact branch width with an optimal witness, by dynamic programming over
// subsets: f({a}) = kappa({a}), f(X) = min over bipartitions of
// max(f(X1), f(X2), kappa(X)), answered at the root bipartition of U.
BranchWidthResult branch_width(const ConnectivitySystem& sys, int subset_limit = 16);

// Exact treewidth via elimination orders: DP over vertex subsets on the
// minimum over orders of the maximum back-degree.
int treewidth(const Graph& g, int vertex_limit = 15);

struct DualityReport {
    int branch_width = 0;
    int max_tangle_order = 0;
    bool equal = false;
};

// Computes both sides independently and reports whether they agree.
DualityReport verify_duality(const ConnectivitySystem& sys, int subset_limit = 16,
                             std::uint64_t budget = kDefaultWorkBudget);

struct InequalityReport {
    int branch_width = 0;  // of the vertex-connectivity system
    int treewidth = 0;
    bool holds = false;
    bool left_tight = false;  // bw == tw + 1
    bool right_tight = false; // tw + 1 == max(3 bw / 2, 2)
};

// bw(G) <= tw(G) + 1 <= max(3 bw(G) / 2, 2), checked exactly.
InequalityReport verify_inequalities(const Graph& g, int subset_limit = 16,
                                     int vertex_limit = 15);

} // namespace tangles

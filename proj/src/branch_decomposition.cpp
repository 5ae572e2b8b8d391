#include "tangles/branch_decomposition.hpp"

#include "tangles/kappa_tangle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace tangles {

namespace {

std::vector<std::vector<int>> adjacency(const CubicTree& t) {
    std::vector<std::vector<int>> adj(t.node_count);
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

} // namespace

std::vector<int> CubicTree::leaves() const {
    auto adj = adjacency(*this);
    std::vector<int> out;
    for (int v = 0; v < node_count; ++v)
        if (adj[v].size() <= 1) out.push_back(v);
    return out;
}

bool CubicTree::is_cubic_tree() const {
    if (node_count <= 0) return false;
    if (static_cast<int>(edges.size()) != node_count - 1) return false;
    auto adj = adjacency(*this);
    for (int v = 0; v < node_count; ++v) {
        auto deg = adj[v].size();
        if (deg != 3 && deg > 1) return false;
    }
    // Connectivity.
    std::vector<char> seen(node_count, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int visited = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++visited;
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
    }
    return visited == node_count;
}

std::vector<int> CubicTree::leaves_toward(int away, int toward) const {
    auto adj = adjacency(*this);
    std::vector<char> seen(node_count, 0);
    seen[away] = 1;
    seen[toward] = 1;
    std::vector<int> out;
    std::deque<int> queue{toward};
    if (adj[toward].size() <= 1) out.push_back(toward);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : adj[v]) {
            if (seen[u]) continue;
            seen[u] = 1;
            if (adj[u].size() <= 1) out.push_back(u);
            queue.push_back(u);
        }
    }
    return out;
}

std::uint64_t BranchDecomposition::side_mask(int away, int toward) const {
    std::uint64_t mask = 0;
    for (int leaf : tree.leaves_toward(away, toward))
        for (auto [node, element] : leaf_map)
            if (node == leaf) mask |= std::uint64_t{1} << (element - 1);
    return mask;
}

int decomposition_width(const ConnectivitySystem& sys, const BranchDecomposition& d) {
    const int n = sys.universe_size();
    if (n <= 1) {
        if (d.tree.node_count != 1 || !d.tree.edges.empty())
            throw PreconditionError("decomposition of a small universe must be a single node");
        return 0;
    }
    if (!d.tree.is_cubic_tree()) throw PreconditionError("decomposition tree is not cubic");
    auto leaves = d.tree.leaves();
    if (d.leaf_map.size() != leaves.size() || static_cast<int>(leaves.size()) != n)
        throw PreconditionError("leaf map is not a bijection onto the universe");
    std::vector<char> node_used(d.tree.node_count, 0), element_used(n + 1, 0);
    for (auto [node, element] : d.leaf_map) {
        if (node < 0 || node >= d.tree.node_count ||
            std::find(leaves.begin(), leaves.end(), node) == leaves.end())
            throw PreconditionError("leaf map names a non-leaf node");
        if (element < 1 || element > n) throw PreconditionError("leaf map element out of universe");
        if (node_used[node]++ || element_used[element]++)
            throw PreconditionError("leaf map is not a bijection onto the universe");
    }

    int width = 0;
    for (auto [a, b] : d.tree.edges) {
        int forward = sys.value(d.side_mask(a, b));
        int backward = sys.value(d.side_mask(b, a));
        if (forward != backward)
            throw std::logic_error("oriented edge values differ under complement symmetry");
        width = std::max(width, forward);
    }
    return width;
}

namespace {

// Rebuilds the witness tree from the DP split choices.
struct WitnessBuilder {
    const std::vector<std::uint32_t>& split;
    CubicTree tree;
    std::vector<std::pair<int, int>> leaf_map;

    int build(std::uint32_t subset) {
        int node = tree.node_count++;
        if (std::popcount(subset) == 1) {
            leaf_map.emplace_back(node, std::countr_zero(subset) + 1);
            return node;
        }
        std::uint32_t s1 = split[subset];
        int left = build(s1);
        int right = build(subset & ~s1);
        tree.edges.emplace_back(node, left);
        tree.edges.emplace_back(node, right);
        return node;
    }
};

} // namespace

BranchWidthResult branch_width(const ConnectivitySystem& sys, int subset_limit) {
    const int n = sys.universe_size();
    if (n > subset_limit)
        throw BudgetError("branch width: universe above the subset DP limit of " +
                          std::to_string(subset_limit));

    BranchWidthResult result;
    if (n <= 1) {
        result.width = 0;
        result.decomposition.tree.node_count = 1;
        if (n == 1) result.decomposition.leaf_map.emplace_back(0, 1);
        return result;
    }

    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    std::vector<int> f(full + 1, 0);
    std::vector<std::uint32_t> split(full + 1, 0);
    std::vector<std::uint32_t> order(full + 1);
    for (std::uint32_t x = 1; x <= full; ++x) order[x] = x;
    std::sort(order.begin() + 1, order.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });

    for (std::uint32_t i = 1; i <= full; ++i) {
        std::uint32_t x = order[i];
        int kx = sys.value(x);
        if (std::popcount(x) == 1) {
            f[x] = kx;
            continue;
        }
        // Visit each unordered bipartition once: the lowest element stays on
        // side one.
        std::uint32_t low = x & (~x + 1);
        std::uint32_t rest = x & ~low;
        int best = INT32_MAX;
        std::uint32_t best_split = 0;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t s1 = low | sub;
            std::uint32_t s2 = x & ~s1;
            if (s2 != 0) {
                int v = std::max({f[s1], f[s2], kx});
                if (v < best) {
                    best = v;
                    best_split = s1;
                }
            }
            if (sub == 0) break;
        }
        f[x] = best;
        split[x] = best_split;
    }

    // Root bipartition: fix element 1 on side one; kappa(U) = 0 adds nothing.
    int best = INT32_MAX;
    std::uint32_t best_split = 0;
    std::uint32_t rest = full & ~std::uint32_t{1};
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        std::uint32_t s1 = std::uint32_t{1} | sub;
        std::uint32_t s2 = full & ~s1;
        if (s2 != 0) {
            int v = std::max(f[s1], f[s2]);
            if (v < best) {
                best = v;
                best_split = s1;
            }
        }
        if (sub == 0) break;
    }

    result.width = best;
    if (n == 2) {
        result.decomposition.tree.node_count = 2;
        result.decomposition.tree.edges = {{0, 1}};
        result.decomposition.leaf_map = {{0, 1}, {1, 2}};
    } else {
        WitnessBuilder builder{split, {}, {}};
        int left = builder.build(best_split);
        int right = builder.build(full & ~best_split);
        builder.tree.edges.emplace_back(left, right);
        result.decomposition.tree = std::move(builder.tree);
        result.decomposition.leaf_map = std::move(builder.leaf_map);
    }

    int check = decomposition_width(sys, result.decomposition);
    if (check != result.width)
        throw std::logic_error("branch width witness reconstructs to a different width");
    return result;
}

namespace {

// Back-degree of v once the set `gone` has been eliminated: neighbours of v
// reachable through eliminated vertices.
int back_degree(const Graph& g, std::uint32_t gone, int v) {
    std::uint32_t seen = std::uint32_t{1} << (v - 1);
    std::deque<int> queue{v};
    int count = 0;
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int b : g.neighbors(a)) {
            std::uint32_t bit = std::uint32_t{1} << (b - 1);
            if (seen & bit) continue;
            seen |= bit;
            if (gone & bit) {
                queue.push_back(b);
            } else {
                ++count;
            }
        }
    }
    return count;
}

} // namespace

int treewidth(const Graph& g, int vertex_limit) {
    const int n = g.vertex_count();
    if (n > vertex_limit)
        throw BudgetError("treewidth: graph above the vertex DP limit of " +
                          std::to_string(vertex_limit));
    if (n == 0) return 0;

    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    std::vector<int> f(full + 1, 0);
    std::vector<std::uint32_t> order(full + 1);
    for (std::uint32_t x = 0; x <= full; ++x) order[x] = x;
    std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });

    for (std::uint32_t i = 1; i <= full; ++i) {
        std::uint32_t x = order[i];
        int best = INT32_MAX;
        for (int v = 1; v <= n; ++v) {
            std::uint32_t bit = std::uint32_t{1} << (v - 1);
            if (!(x & bit)) continue;
            std::uint32_t rest = x & ~bit;
            best = std::min(best, std::max(f[rest], back_degree(g, rest, v)));
        }
        f[x] = best;
    }
    return f[full];
}

DualityReport verify_duality(const ConnectivitySystem& sys, int subset_limit,
                             std::uint64_t budget) {
    DualityReport report;
    report.branch_width = branch_width(sys, subset_limit).width;
    report.max_tangle_order = max_tangle_order(sys, budget);
    report.equal = report.branch_width == report.max_tangle_order;
    return report;
}

InequalityReport verify_inequalities(const Graph& g, int subset_limit, int vertex_limit) {
    InequalityReport report;
    report.branch_width = branch_width(ConnectivitySystem::vertex_connectivity(g), subset_limit).width;
    report.treewidth = treewidth(g, vertex_limit);
    int left = report.branch_width;
    int mid = report.treewidth + 1;
    // Right side is max(3 bw / 2, 2); compare doubled to stay integral.
    report.holds = left <= mid && 2 * mid <= std::max(3 * report.branch_width, 4);
    report.left_tight = left == mid;
    report.right_tight = 2 * mid == std::max(3 * report.branch_width, 4);
    return report;
}

} // namespace tangles

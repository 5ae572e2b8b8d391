#include "tangles/blocks.hpp"

#include "tangles/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace tangles {

namespace {

// Unit-capacity max flow on the vertex-split digraph: every vertex w other
// than source/sink becomes w_in -> w_out with capacity 1; each undirected
// edge xy contributes x_out -> y_in and y_out -> x_in. The max u-v flow is
// the minimum vertex cut by Menger.
class VertexCutSolver {
public:
    VertexCutSolver(const Graph& g, int s, int t) : s_(s), t_(t) {
        int n = g.vertex_count();
        // node ids: in(v) = 2v-2, out(v) = 2v-1 (v is 1-based)
        for (int v = 1; v <= n; ++v)
            add_arc(in(v), out(v), v == s_ || v == t_ ? 2 * n : 1);
        for (int id = 1; id <= g.edge_count(); ++id) {
            auto [x, y] = g.edge(id);
            add_arc(out(x), in(y), 2 * n);
            add_arc(out(y), in(x), 2 * n);
        }
    }

    int max_flow() {
        int total = 0;
        while (augment()) ++total;
        return total;
    }

private:
    struct Arc {
        int to;
        int cap;
        int rev;
    };

    static int in(int v) { return 2 * (v - 1); }
    static int out(int v) { return 2 * (v - 1) + 1; }

    void add_arc(int a, int b, int c) {
        if (static_cast<int>(graph_.size()) <= std::max(a, b)) graph_.resize(std::max(a, b) + 1);
        graph_[a].push_back({b, c, static_cast<int>(graph_[b].size())});
        graph_[b].push_back({a, 0, static_cast<int>(graph_[a].size()) - 1});
    }

    bool augment() {
        int source = out(s_), sink = in(t_);
        std::vector<std::pair<int, int>> pred(graph_.size(), {-1, -1});
        std::deque<int> queue{source};
        pred[source] = {source, 0};
        while (!queue.empty() && pred[sink].first == -1) {
            int a = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < graph_[a].size(); ++i) {
                const Arc& arc = graph_[a][i];
                if (arc.cap <= 0 || pred[arc.to].first != -1) continue;
                pred[arc.to] = {a, static_cast<int>(i)};
                queue.push_back(arc.to);
            }
        }
        if (pred[sink].first == -1) return false;
        for (int v = sink; v != source;) {
            auto [p, i] = pred[v];
            Arc& arc = graph_[p][i];
            arc.cap -= 1;
            graph_[arc.to][arc.rev].cap += 1;
            v = p;
        }
        return true;
    }

    int s_, t_;
    std::vector<std::vector<Arc>> graph_;
};

} // namespace

int min_vertex_cut(const Graph& g, int u, int v) {
    if (u == v) throw PreconditionError("min_vertex_cut: vertices must differ");
    if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count())
        throw PreconditionError("min_vertex_cut: vertex out of range");
    if (g.adjacent(u, v)) throw PreconditionError("min_vertex_cut: vertices are adjacent");
    VertexCutSolver solver(g, u, v);
    return solver.max_flow();
}

bool pair_k_inseparable(const Graph& g, int u, int v, int k) {
    if (u == v) return true;
    if (g.adjacent(u, v)) return true;
    return min_vertex_cut(g, u, v) > k;
}

bool is_k_inseparable(const Graph& g, const IdSet& x, int k) {
    if (!x.subset_of(g.vertex_set()))
        throw PreconditionError("is_k_inseparable: set not within graph");
    if (x.size() <= k) return false;
    auto verts = x.elements();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!pair_k_inseparable(g, verts[i], verts[j], k)) return false;
    return true;
}

namespace {

// Bron-Kerbosch with pivoting over an explicit relation matrix.
void maximal_cliques(const std::vector<IdSet>& rel, IdSet r, IdSet p, IdSet x,
                     std::vector<IdSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    IdSet px = p | x;
    int pivot = px.first();
    int best = -1;
    for (int v = px.first(); v != -1; v = px.next(v)) {
        int deg = (rel[v] & p).size();
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    IdSet candidates = p - rel[pivot];
    for (int v = candidates.first(); v != -1; v = candidates.next(v)) {
        IdSet r2 = r;
        r2.add(v);
        maximal_cliques(rel, r2, p & rel[v], x & rel[v], out);
        p.remove(v);
        x.add(v);
    }
}

} // namespace

BlockSet k_blocks(const Graph& g, int k) {
    if (k < 0) throw PreconditionError("k_blocks: k must be nonnegative");
    const int n = g.vertex_count();
    BlockSet out;
    out.k = k;
    if (n == 0) return out;

    std::vector<IdSet> rel(n + 1);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (pair_k_inseparable(g, u, v, k)) {
                rel[u].add(v);
                rel[v].add(u);
            }

    std::vector<IdSet> cliques;
    maximal_cliques(rel, IdSet{}, g.vertex_set(), IdSet{}, cliques);
    for (const auto& c : cliques)
        if (c.size() > k) out.members.push_back(c);
    std::sort(out.members.begin(), out.members.end());
    return out;
}

namespace {

// Shortest v-w path whose interior stays inside comp.
std::vector<int> witness_path(const Graph& g, const IdSet& comp, int v, int w) {
    std::vector<int> parent(g.vertex_count() + 1, -1);
    std::deque<int> queue;
    for (int c : g.neighbors(v))
        if (comp.contains(c) && parent[c] == -1) {
            parent[c] = v;
            queue.push_back(c);
        }
    int reached = -1;
    while (!queue.empty() && reached == -1) {
        int a = queue.front();
        queue.pop_front();
        if (g.adjacent(a, w)) {
            reached = a;
            break;
        }
        for (int b : g.neighbors(a))
            if (comp.contains(b) && parent[b] == -1) {
                parent[b] = a;
                queue.push_back(b);
            }
    }
    if (reached == -1)
        throw std::logic_error("torso: no witness path through component");
    std::vector<int> path{w};
    for (int a = reached; a != v; a = parent[a]) path.push_back(a);
    path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

Torso torso(const Graph& g, const IdSet& x) {
    if (!x.subset_of(g.vertex_set())) throw PreconditionError("torso: set not within graph");
    Torso t;
    t.base = x;
    for (int id = 1; id <= g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        if (x.contains(u) && x.contains(v)) t.real_edges.emplace_back(u, v);
    }
    std::vector<std::pair<int, int>> virt;
    std::vector<std::vector<int>> paths;
    for (const auto& comp : components_avoiding(g, x)) {
        IdSet attach = g.neighborhood(comp) & x;
        auto verts = attach.elements();
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                int v = verts[i], w = verts[j];
                if (g.adjacent(v, w)) continue;
                auto path = witness_path(g, comp, v, w);
                for (std::size_t p = 1; p + 1 < path.size(); ++p)
                    if (x.contains(path[p]))
                        throw std::logic_error("torso: witness path touches base");
                virt.emplace_back(v, w);
                paths.push_back(std::move(path));
            }
    }
    // Several components may suggest the same virtual edge; keep one witness.
    std::vector<std::size_t> idx(virt.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return virt[a] < virt[b]; });
    for (std::size_t i : idx) {
        if (!t.virtual_edges.empty() && t.virtual_edges.back() == virt[i]) continue;
        t.virtual_edges.push_back(virt[i]);
        t.virtual_paths.push_back(paths[i]);
    }
    t.proper = t.order() >= 4;
    return t;
}

std::vector<Torso> triconnected_components(const Graph& g) {
    std::vector<Torso> out;
    for (const auto& block : k_blocks(g, 2).members) {
        for (const auto& comp : components_avoiding(g, block)) {
            IdSet attach = g.neighborhood(comp) & block;
            if (attach.size() > 2)
                throw std::logic_error(
                    "triconnected_components: outside component with more than "
                    "2 attachments at a 2-block");
        }
        out.push_back(torso(g, block));
    }
    return out;
}

} // namespace tangles

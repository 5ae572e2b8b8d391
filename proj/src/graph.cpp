#include "tangles/graph.hpp"

#include "tangles/errors.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace tangles {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    if (n >= IdSet::kCapacity)
        throw PreconditionError("instance too large: more than " +
                                std::to_string(IdSet::kCapacity - 1) + " vertices");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("edge endpoint out of range");
        if (u == v) throw ParseError("loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ParseError("duplicate edge");
    if (static_cast<int>(edges.size()) >= IdSet::kCapacity)
        throw PreconditionError("instance too large: more than " +
                                std::to_string(IdSet::kCapacity - 1) + " edges");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n + 1, {});
    g.incident_.assign(n + 1, {});
    for (int id = 1; id <= g.edge_count(); ++id) {
        auto [u, v] = g.edges_[id - 1];
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.incident_[u].add(id);
        g.incident_[v].add(id);
    }
    for (int v = 1; v <= n; ++v) std::sort(g.adj_[v].begin(), g.adj_[v].end());
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_) throw PreconditionError("vertex id out of range");
}

std::pair<int, int> Graph::edge(int id) const {
    if (id < 1 || id > edge_count()) throw PreconditionError("edge id out of range");
    return edges_[id - 1];
}

int Graph::edge_id(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return 0;
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
    if (it != edges_.end() && *it == std::pair{u, v})
        return static_cast<int>(it - edges_.begin()) + 1;
    return 0;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

IdSet Graph::vertex_set() const { return IdSet::closed_range(1, n_); }

IdSet Graph::edge_id_set() const { return IdSet::closed_range(1, edge_count()); }

IdSet Graph::incident_edge_ids(int v) const {
    check_vertex(v);
    return incident_[v];
}

IdSet Graph::neighbor_set(int v) const {
    check_vertex(v);
    IdSet s;
    for (int u : adj_[v]) s.add(u);
    return s;
}

IdSet Graph::endpoints_of(const IdSet& edge_ids) const {
    IdSet s;
    for (int id = edge_ids.first(); id != -1; id = edge_ids.next(id)) {
        auto [u, v] = edge(id);
        s.add(u);
        s.add(v);
    }
    return s;
}

IdSet Graph::neighborhood(const IdSet& w) const {
    IdSet s;
    for (int v = w.first(); v != -1; v = w.next(v))
        for (int u : neighbors(v))
            if (!w.contains(u)) s.add(u);
    return s;
}

Graph parse_graph(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty graph input");
    std::istringstream head(lines[0]);
    int n = 0, m = 0;
    if (!(head >> n >> m) || n < 0 || m < 0) throw ParseError("bad header line, expected 'n m'");
    if (static_cast<int>(lines.size()) != m + 1)
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 1; i <= m; ++i) {
        std::istringstream es(lines[i]);
        int u = 0, v = 0;
        if (!(es >> u >> v)) throw ParseError("bad edge line: " + lines[i]);
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int id = 1; id <= g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

namespace {

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n, 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_grid(int rows, int cols) {
    auto id = [cols](int r, int c) { return r * cols + c + 1; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, std::move(edges));
}

// Honeycomb patch: a centre hexagon surrounded by `rings` concentric rings of
// hexagons. Cells live on axial coordinates; corners on an integer lattice so
// shared corners coincide exactly. Boundary corners of degree 2 are smoothed
// away (their two incident edges merge), which leaves the 3-regular grid the
// figure-style drawings show; without the smoothing the patch would not even
// be 3-connected.
Graph make_hexgrid(int rings) {
    struct Point {
        int x, y;
        bool operator<(const Point& o) const { return std::pair{x, y} < std::pair{o.x, o.y}; }
        bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    };
    const Point corner_offsets[6] = {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}};

    std::vector<std::array<Point, 6>> cells;
    for (int q = -rings; q <= rings; ++q)
        for (int r = -rings; r <= rings; ++r) {
            if ((std::abs(q) + std::abs(r) + std::abs(q + r)) / 2 > rings) continue;
            Point center{3 * q, 2 * r + q};
            std::array<Point, 6> cs;
            for (int i = 0; i < 6; ++i)
                cs[i] = Point{center.x + corner_offsets[i].x, center.y + corner_offsets[i].y};
            cells.push_back(cs);
        }

    std::map<Point, int> corner_id;
    for (const auto& cs : cells)
        for (const auto& p : cs) corner_id.emplace(p, 0);
    int next_id = 0;
    for (auto& [p, id] : corner_id) id = ++next_id;

    std::vector<std::pair<int, int>> raw;
    for (const auto& cs : cells)
        for (int i = 0; i < 6; ++i) {
            int a = corner_id[cs[i]], b = corner_id[cs[(i + 1) % 6]];
            raw.emplace_back(std::min(a, b), std::max(a, b));
        }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // Smooth maximal chains of degree-2 corners into single edges.
    int nc = next_id;
    std::vector<std::vector<int>> adj(nc + 1);
    for (auto [a, b] : raw) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> keep(nc + 1, 0);
    for (int v = 1; v <= nc; ++v) keep[v] = adj[v].size() >= 3;
    std::vector<std::pair<int, int>> smoothed;
    std::vector<char> edge_done(raw.size(), 0);
    auto raw_index = [&](int a, int b) {
        auto it = std::lower_bound(raw.begin(), raw.end(),
                                   std::pair{std::min(a, b), std::max(a, b)});
        return static_cast<int>(it - raw.begin());
    };
    for (int v = 1; v <= nc; ++v) {
        if (!keep[v]) continue;
        for (int w : adj[v]) {
            int idx = raw_index(v, w);
            if (edge_done[idx]) continue;
            // Walk through degree-2 corners until the next kept corner.
            int prev = v, cur = w;
            edge_done[idx] = 1;
            while (!keep[cur]) {
                int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
                edge_done[raw_index(cur, nxt)] = 1;
                prev = cur;
                cur = nxt;
            }
            if (v < cur) smoothed.emplace_back(v, cur);
            else if (cur < v) smoothed.emplace_back(cur, v);
            // v == cur would be a smoothed self-loop; cannot happen for rings >= 1.
        }
    }
    std::sort(smoothed.begin(), smoothed.end());
    smoothed.erase(std::unique(smoothed.begin(), smoothed.end()), smoothed.end());

    // Relabel kept corners 1..V in corner-lattice order.
    std::vector<int> relabel(nc + 1, 0);
    int nv = 0;
    for (int v = 1; v <= nc; ++v)
        if (keep[v]) relabel[v] = ++nv;
    for (auto& [a, b] : smoothed) {
        a = relabel[a];
        b = relabel[b];
    }
    return Graph::from_edges(nv, std::move(smoothed));
}

Graph make_subdivided_k4() {
    // K4 on 1..4, each edge subdivided once; subdivision vertices 5..10
    // follow the canonical order of the original edges.
    std::vector<std::pair<int, int>> k4 = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    std::vector<std::pair<int, int>> edges;
    int mid = 5;
    for (auto [u, v] : k4) {
        edges.emplace_back(u, mid);
        edges.emplace_back(v, mid);
        ++mid;
    }
    return Graph::from_edges(10, std::move(edges));
}

Graph make_fig3() {
    // The 8-vertex, 10-edge example graph: a pendant edge at v3, a triangle
    // v2-v7-v8, and a 2-connected block on v1..v5.
    return Graph::from_edges(8, {{1, 2},
                                 {1, 3},
                                 {3, 6},
                                 {2, 3},
                                 {2, 7},
                                 {2, 8},
                                 {7, 8},
                                 {3, 5},
                                 {2, 4},
                                 {4, 5}});
}

} // namespace

Graph named_graph(const std::string& name, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw PreconditionError("generator '" + name + "' expects " + std::to_string(k) +
                                    " parameter(s)");
        for (int p : params)
            if (p <= 0) throw PreconditionError("generator parameters must be positive");
    };
    if (name == "complete") {
        want(1);
        return make_complete(params[0]);
    }
    if (name == "path") {
        want(1);
        return make_path(params[0]);
    }
    if (name == "cycle") {
        want(1);
        return make_cycle(params[0]);
    }
    if (name == "grid") {
        want(2);
        return make_grid(params[0], params[1]);
    }
    if (name == "hexgrid") {
        want(1);
        return make_hexgrid(params[0]);
    }
    if (name == "subdivided-k4") {
        want(0);
        return make_subdivided_k4();
    }
    if (name == "fig3") {
        want(0);
        return make_fig3();
    }
    throw PreconditionError("unknown graph name: " + name);
}

std::vector<IdSet> components_avoiding(const Graph& g, const IdSet& removed) {
    std::vector<IdSet> out;
    IdSet seen = removed;
    for (int s = 1; s <= g.vertex_count(); ++s) {
        if (seen.contains(s)) continue;
        IdSet comp;
        std::vector<int> stack{s};
        seen.add(s);
        comp.add(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (seen.contains(u)) continue;
                seen.add(u);
                comp.add(u);
                stack.push_back(u);
            }
        }
        out.push_back(comp);
    }
    return out;
}

std::vector<IdSet> components(const Graph& g) { return components_avoiding(g, IdSet{}); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

InducedSubgraph induced_subgraph(const Graph& g, const IdSet& verts) {
    InducedSubgraph out;
    out.to_parent.assign(1, 0);
    out.from_parent.assign(g.vertex_count() + 1, 0);
    for (int v = verts.first(); v != -1; v = verts.next(v)) {
        out.to_parent.push_back(v);
        out.from_parent[v] = static_cast<int>(out.to_parent.size()) - 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (int id = 1; id <= g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        if (verts.contains(u) && verts.contains(v))
            edges.emplace_back(out.from_parent[u], out.from_parent[v]);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()) - 1, std::move(edges));
    return out;
}

} // namespace tangles

#pragma once

#include "tangles/idset.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tangles {

// Simple undirected graph on vertices 1..n. Edges are stored in canonical
// order (sorted endpoint pairs, lexicographic) and carry ids 1..m; the edge
// id order is stable across runs and serialisations.
class Graph {
public:
    Graph() = default;

    // Validates simplicity and endpoint range, sorts endpoints and edges,
    // assigns canonical ids. Rejects loops and duplicate edges.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> edge(int id) const;
    int edge_id(int u, int v) const; // 0 if no such edge
    bool adjacent(int u, int v) const { return edge_id(u, v) != 0; }
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;

    IdSet vertex_set() const;
    IdSet edge_id_set() const;
    IdSet incident_edge_ids(int v) const;
    IdSet neighbor_set(int v) const;

    IdSet endpoints_of(const IdSet& edge_ids) const;
    // N(W): neighbours of W outside W.
    IdSet neighborhood(const IdSet& w) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;       // per-vertex sorted neighbour lists
    std::vector<IdSet> incident_;             // per-vertex incident edge ids
};

// Text format: first line "n m", then m lines "u v" (1-based). Lines whose
// first non-blank character is '#' and blank lines are skipped. Writers emit
// the canonical form byte-exactly.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
std::string write_graph(const Graph& g);

// Deterministic generators: complete N | path N | cycle N | grid R C |
// hexgrid R | subdivided-k4 | fig3.
Graph named_graph(const std::string& name, const std::vector<int>& params);

std::vector<IdSet> components(const Graph& g);
// Components of G \ removed.
std::vector<IdSet> components_avoiding(const Graph& g, const IdSet& removed);
bool is_connected(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;   // new id -> old id (index 1..)
    std::vector<int> from_parent; // old id -> new id, 0 if absent
};
InducedSubgraph induced_subgraph(const Graph& g, const IdSet& verts);

} // namespace tangles

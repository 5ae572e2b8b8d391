#include "tangles/separation.hpp"

#include <algorithm>
#include <string>

namespace tangles {

namespace {

const char* separation_defect(const Graph& g, const Separation& s) {
    if ((s.edges_a & s.edges_b) != IdSet{}) return "edge sides overlap";
    if ((s.edges_a | s.edges_b) != g.edge_id_set()) return "edge sides do not partition E";
    if (!g.endpoints_of(s.edges_a).subset_of(s.verts_a)) return "side A misses endpoints";
    if (!g.endpoints_of(s.edges_b).subset_of(s.verts_b)) return "side B misses endpoints";
    if ((s.verts_a | s.verts_b) != g.vertex_set()) return "vertex sides do not cover V";
    if (!s.verts_a.subset_of(g.vertex_set())) return "side A has foreign vertices";
    if (!s.verts_b.subset_of(g.vertex_set())) return "side B has foreign vertices";
    return nullptr;
}

} // namespace

bool is_valid_separation(const Graph& g, const Separation& s) {
    return separation_defect(g, s) == nullptr;
}

void require_valid_separation(const Graph& g, const Separation& s) {
    if (const char* defect = separation_defect(g, s))
        throw PreconditionError(std::string("malformed separation: ") + defect);
}

std::vector<Separation> enumerate_separations(const Graph& g, int max_order,
                                              std::uint64_t budget) {
    if (max_order < 0) throw PreconditionError("max_order must be nonnegative");
    const int m = g.edge_count();
    WorkBudget work(budget);
    if (m >= 63) throw BudgetError("separation enumeration: too many edges");
    work.require(std::uint64_t{1} << m, "separation enumeration");

    const IdSet all_vertices = g.vertex_set();
    const IdSet all_edges = g.edge_id_set();
    std::vector<Separation> out;

    // Incident-edge masks once, as plain uint64 for the bipartition scan.
    std::vector<std::uint64_t> incident(g.vertex_count() + 1, 0);
    for (int id = 1; id <= m; ++id) {
        auto [u, v] = g.edge(id);
        incident[u] |= std::uint64_t{1} << (id - 1);
        incident[v] |= std::uint64_t{1} << (id - 1);
    }

    std::vector<int> pool;
    std::vector<int> chosen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        work.charge(1, "separation enumeration");
        IdSet edges_a, base_a, base_b;
        for (int v = 1; v <= g.vertex_count(); ++v) {
            std::uint64_t inc = incident[v];
            if (inc & mask) base_a.add(v);
            if (inc & ~mask) base_b.add(v);
        }
        IdSet forced = base_a & base_b;
        if (forced.size() > max_order) continue;
        for (int id = 1; id <= m; ++id)
            if (mask & (std::uint64_t{1} << (id - 1))) edges_a.add(id);
        IdSet edges_b = all_edges - edges_a;

        // Vertices that may additionally sit on both sides, and isolated
        // vertices that must be placed on at least one side.
        IdSet free = all_vertices - (base_a | base_b);
        pool = (all_vertices - forced).elements();
        const int slack = max_order - forced.size();

        // Choose up to `slack` extra shared vertices from `pool`, then place
        // the remaining free vertices on a single side each.
        chosen.clear();
        auto emit = [&]() {
            IdSet shared;
            for (int v : chosen) shared.add(v);
            IdSet undecided = free - shared;
            std::vector<int> und = undecided.elements();
            work.require(std::uint64_t{1} << und.size(), "separation enumeration");
            for (std::uint64_t fm = 0; fm < (std::uint64_t{1} << und.size()); ++fm) {
                work.charge(1, "separation enumeration");
                IdSet verts_a = base_a | shared;
                IdSet verts_b = base_b | shared;
                for (std::size_t i = 0; i < und.size(); ++i) {
                    if (fm & (std::uint64_t{1} << i)) verts_a.add(und[i]);
                    else verts_b.add(und[i]);
                }
                out.push_back({edges_a, verts_a, edges_b, verts_b});
            }
        };
        auto choose = [&](auto&& self, std::size_t from) -> void {
            emit();
            if (static_cast<int>(chosen.size()) == slack) return;
            for (std::size_t i = from; i < pool.size(); ++i) {
                chosen.push_back(pool[i]);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        choose(choose, 0);
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 0) throw PreconditionError("k must be nonnegative");
    if (g.vertex_count() <= k) return false;
    if (k == 0) return true;
    // A proper separation of order < k exists iff some vertex set of size
    // < k disconnects the graph.
    const int limit = k - 1;
    std::vector<int> sel;
    auto search = [&](auto&& self, int from, IdSet removed) -> bool {
        if (components_avoiding(g, removed).size() >= 2) return true;
        if (static_cast<int>(sel.size()) == limit) return false;
        for (int v = from; v <= g.vertex_count(); ++v) {
            sel.push_back(v);
            IdSet r = removed;
            r.add(v);
            if (self(self, v + 1, r)) return true;
            sel.pop_back();
        }
        return false;
    };
    return !search(search, 1, IdSet{});
}

bool is_quasi_4_connected(const Graph& g) {
    if (!is_k_connected(g, 3)) return false;
    const int n = g.vertex_count();
    // An order-3 separation with >= 2 non-separator vertices on both sides
    // exists iff for some triple S the components of G \ S other than the
    // largest carry >= 2 vertices in total.
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                auto comps = components_avoiding(g, IdSet::of({a, b, c}));
                if (comps.size() < 2) continue;
                int total = 0, largest = 0;
                for (const auto& comp : comps) {
                    int size = comp.size();
                    total += size;
                    largest = std::max(largest, size);
                }
                if (total - largest >= 2) return false;
            }
    return true;
}

} // namespace tangles

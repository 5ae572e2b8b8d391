#include "tangles/graph_tangle.hpp"

#include "tangles/blocks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tangles {

bool GraphTangle::contains(const Separation& s) const {
    auto it = std::lower_bound(members.begin(), members.end(), s);
    return it != members.end() && *it == s;
}

const char* to_string(GraphAxiom a) {
    switch (a) {
    case GraphAxiom::GT0: return "GT0";
    case GraphAxiom::GT1: return "GT1";
    case GraphAxiom::GT2: return "GT2";
    case GraphAxiom::GT3: return "GT3";
    }
    return "?";
}

std::string AxiomReport::summary() const {
    if (passed) return "passed";
    std::ostringstream out;
    out << "violated:";
    for (const auto& v : violations) out << ' ' << to_string(v.axiom);
    return out.str();
}

namespace {

struct ASide {
    IdSet verts;
    IdSet edges;
    const Separation* source;
};

bool triple_covers(const ASide& a, const ASide& b, const ASide& c, const IdSet& all_verts,
                   const IdSet& all_edges) {
    return (a.verts | b.verts | c.verts) == all_verts && (a.edges | b.edges | c.edges) == all_edges;
}

// Inclusion-maximal A-sides among the members. A covering triple exists iff
// one exists among these, so GT2 only ever inspects the antichain.
std::vector<ASide> maximal_a_sides(const std::vector<Separation>& members) {
    std::vector<ASide> anti;
    for (const auto& s : members) {
        bool dominated = false;
        for (const auto& m : anti)
            if (s.verts_a.subset_of(m.verts) && s.edges_a.subset_of(m.edges)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        std::erase_if(anti, [&](const ASide& m) {
            return m.verts.subset_of(s.verts_a) && m.edges.subset_of(s.edges_a);
        });
        anti.push_back({s.verts_a, s.edges_a, &s});
    }
    return anti;
}

// First covering triple (with repetition) among the maximal A-sides.
std::vector<Separation> find_gt2_violation(const std::vector<Separation>& members,
                                           const IdSet& all_verts, const IdSet& all_edges) {
    auto anti = maximal_a_sides(members);
    for (std::size_t i = 0; i < anti.size(); ++i)
        for (std::size_t j = i; j < anti.size(); ++j)
            for (std::size_t l = j; l < anti.size(); ++l)
                if (triple_covers(anti[i], anti[j], anti[l], all_verts, all_edges))
                    return {*anti[i].source, *anti[j].source, *anti[l].source};
    return {};
}

} // namespace

AxiomReport check_graph_tangle(const Graph& g, const GraphTangle& t, std::uint64_t budget) {
    for (const auto& s : t.members) require_valid_separation(g, s);
    if (t.order < 1) throw PreconditionError("tangle order must be at least 1");

    AxiomReport report;
    auto flag = [&](GraphAxiom a, std::vector<Separation> witness) {
        report.passed = false;
        report.violations.push_back({a, std::move(witness)});
    };

    for (const auto& s : t.members)
        if (s.order() >= t.order) {
            flag(GraphAxiom::GT0, {s});
            break;
        }

    std::unordered_set<Separation, SeparationHash> member_set(t.members.begin(), t.members.end());
    for (const auto& s : enumerate_separations(g, t.order - 1, budget))
        if (!member_set.count(s) && !member_set.count(s.flipped())) {
            flag(GraphAxiom::GT1, {s});
            break;
        }

    auto gt2 = find_gt2_violation(t.members, g.vertex_set(), g.edge_id_set());
    if (!gt2.empty()) flag(GraphAxiom::GT2, std::move(gt2));

    for (const auto& s : t.members)
        if (s.verts_a == g.vertex_set()) {
            flag(GraphAxiom::GT3, {s});
            break;
        }

    return report;
}

namespace {

IdSet incident_edges_of_set(const Graph& g, const IdSet& verts) {
    IdSet out;
    for (int v = verts.first(); v != -1; v = verts.next(v)) out |= g.incident_edge_ids(v);
    return out;
}

// Closed-component member: big side is the component plus its attachments
// and incident edges, small side is everything else.
struct ClosedMember {
    IdSet comp;
    ASide a;
};

void sort_canonical(std::vector<GraphTangle>& ts) {
    std::sort(ts.begin(), ts.end(), [](const GraphTangle& a, const GraphTangle& b) {
        return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                            b.members.begin(), b.members.end());
    });
}

} // namespace

std::vector<GraphTangle> enumerate_graph_tangles(const Graph& g, int order,
                                                 std::uint64_t budget) {
    if (order < 1) throw PreconditionError("tangle order must be at least 1");
    const int n = g.vertex_count();
    std::vector<GraphTangle> out;
    if (n == 0 || order > n) return out;

    WorkBudget work(budget);
    const auto seps = enumerate_separations(g, order - 1, budget);
    const IdSet all_verts = g.vertex_set();
    const IdSet all_edges = g.edge_id_set();

    // Separator candidates: every S with |S| < order, by (size, canonical).
    std::vector<IdSet> ssets;
    std::vector<int> pick;
    auto gen = [&](auto&& self, int from, int want) -> void {
        if (want == 0) {
            IdSet s;
            for (int v : pick) s.add(v);
            ssets.push_back(s);
            return;
        }
        for (int v = from; v <= n - want + 1; ++v) {
            pick.push_back(v);
            self(self, v + 1, want - 1);
            pick.pop_back();
        }
    };
    for (int size = 0; size < order; ++size) gen(gen, 1, size);

    std::unordered_map<IdSet, int, IdSetHash> sindex;
    std::vector<std::vector<IdSet>> comps(ssets.size());
    for (std::size_t i = 0; i < ssets.size(); ++i) {
        sindex.emplace(ssets[i], static_cast<int>(i));
        comps[i] = components_avoiding(g, ssets[i]);
        work.charge(comps[i].size() + 1, "tangle enumeration");
    }

    std::vector<int> assignment(ssets.size(), -1);
    std::vector<ClosedMember> closed;

    auto conflicts = [&](const ClosedMember& m) {
        for (std::size_t i = 0; i <= closed.size(); ++i)
            for (std::size_t j = i; j <= closed.size(); ++j) {
                const ASide& x = i < closed.size() ? closed[i].a : m.a;
                const ASide& y = j < closed.size() ? closed[j].a : m.a;
                if (triple_covers(m.a, x, y, all_verts, all_edges)) return true;
            }
        return false;
    };

    auto materialize = [&]() {
        GraphTangle t;
        t.order = order;
        for (const auto& s : seps) {
            const IdSet sep = s.separator();
            const IdSet& c = comps[sindex.at(sep)][assignment[sindex.at(sep)]];
            if (c.subset_of(s.verts_b)) t.members.push_back(s);
        }
        out.push_back(std::move(t));
    };

    auto search = [&](auto&& self, std::size_t level) -> void {
        if (level == ssets.size()) {
            materialize();
            return;
        }
        const IdSet& s = ssets[level];
        for (std::size_t ci = 0; ci < comps[level].size(); ++ci) {
            work.charge(1, "tangle enumeration");
            const IdSet& c = comps[level][ci];

            // The big component shrinks as the separator grows.
            bool monotone = true;
            for (int x = s.first(); x != -1 && monotone; x = s.next(x)) {
                IdSet pred = s;
                pred.remove(x);
                int pi = sindex.at(pred);
                monotone = c.subset_of(comps[pi][assignment[pi]]);
            }
            if (!monotone) continue;

            IdSet attach = g.neighborhood(c);
            if (c.size() + attach.size() < order) continue; // small side forced the other way

            ClosedMember m{c, {all_verts - c, all_edges - incident_edges_of_set(g, c), nullptr}};
            bool is_new = std::none_of(closed.begin(), closed.end(),
                                       [&](const ClosedMember& e) { return e.comp == c; });
            if (is_new) {
                if (conflicts(m)) continue;
                closed.push_back(m);
            }
            assignment[level] = static_cast<int>(ci);
            self(self, level + 1);
            assignment[level] = -1;
            if (is_new) closed.pop_back();
        }
    };
    search(search, 0);

    sort_canonical(out);
    return out;
}

GraphTangle oriented_toward(const Graph& g, const IdSet& x, int order, std::uint64_t budget) {
    if (order < 1) throw PreconditionError("tangle order must be at least 1");
    if (!x.subset_of(g.vertex_set()))
        throw PreconditionError("oriented_toward: set not within graph");
    GraphTangle t;
    t.order = order;
    for (const auto& s : enumerate_separations(g, order - 1, budget))
        if (x.subset_of(s.verts_b)) t.members.push_back(s);
    return t;
}

GraphTangle block_tangle(const Graph& g, const IdSet& x, int order, std::uint64_t budget) {
    if (order < 1) throw PreconditionError("tangle order must be at least 1");
    if (!is_k_inseparable(g, x, order - 1))
        throw PreconditionError("block_tangle: set is not (order-1)-inseparable");
    if (2 * x.size() <= 3 * (order - 1))
        throw PreconditionError("block_tangle: size bound |x| > 3(order-1)/2 violated");
    GraphTangle t = oriented_toward(g, x, order, budget);
    AxiomReport report = check_graph_tangle(g, t, budget);
    if (!report.passed)
        throw std::logic_error("block_tangle: construction failed axiom check (" +
                               report.summary() + ")");
    return t;
}

AxiomReport improper_2block_counterexample(const Graph& g, const IdSet& x,
                                           std::uint64_t budget) {
    if (x.size() != 3) throw PreconditionError("expected a 2-block of cardinality 3");
    auto blocks = k_blocks(g, 2);
    if (std::find(blocks.members.begin(), blocks.members.end(), x) == blocks.members.end())
        throw PreconditionError("expected a 2-block of cardinality 3");

    GraphTangle t = oriented_toward(g, x, 3, budget);

    auto comps = components_avoiding(g, x);
    for (const auto& c : comps)
        if ((g.neighborhood(c) & x).size() > 2)
            throw std::logic_error("2-block with a component attached at 3 vertices");

    // For each pair {xi, xj}: gather the components attached inside the pair
    // into the small side. The three pair separations cover G.
    auto verts = x.elements();
    std::vector<Separation> triple;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            IdSet pair = IdSet::of({verts[i], verts[j]});
            IdSet y;
            for (const auto& c : comps)
                if (g.neighborhood(c).subset_of(pair)) y |= c;
            IdSet side_a = y | pair;
            IdSet edges_a;
            for (int id = 1; id <= g.edge_count(); ++id) {
                auto [u, v] = g.edge(id);
                if (side_a.contains(u) && side_a.contains(v)) edges_a.add(id);
            }
            Separation s{edges_a, side_a, g.edge_id_set() - edges_a, g.vertex_set() - y};
            require_valid_separation(g, s);
            if (!t.contains(s))
                throw std::logic_error("pair separation missing from the oriented family");
            triple.push_back(s);
        }

    IdSet cover_v = triple[0].verts_a | triple[1].verts_a | triple[2].verts_a;
    IdSet cover_e = triple[0].edges_a | triple[1].edges_a | triple[2].edges_a;
    if (cover_v != g.vertex_set() || cover_e != g.edge_id_set())
        throw std::logic_error("pair separations fail to cover the graph");

    AxiomReport generic = check_graph_tangle(g, t, budget);
    if (generic.passed)
        throw std::logic_error("orientation family toward an improper 2-block passed the axioms");

    AxiomReport report;
    report.passed = false;
    report.violations.push_back({GraphAxiom::GT2, std::move(triple)});
    return report;
}

IdSet big_component(const Graph& g, const GraphTangle& t, const IdSet& s) {
    if (s.size() >= t.order)
        throw PreconditionError("big_component: |s| must be below the tangle order");
    std::vector<const Separation*> local;
    for (const auto& m : t.members)
        if (m.separator().subset_of(s)) local.push_back(&m);

    std::vector<IdSet> hits;
    for (const auto& comp : components_avoiding(g, s)) {
        bool ok = true;
        for (const Separation* m : local)
            if (!comp.subset_of(m->verts_b)) {
                ok = false;
                break;
            }
        if (ok) hits.push_back(comp);
    }
    if (hits.size() != 1)
        throw std::logic_error("big_component: expected exactly one consistent component, got " +
                               std::to_string(hits.size()));
    return hits[0];
}

namespace {

bool pair_dominates(const Separation& small, const Separation& s) {
    // small has a larger A side and smaller B side than s (not equal).
    return s.verts_a.subset_of(small.verts_a) && s.edges_a.subset_of(small.edges_a) &&
           small.verts_b.subset_of(s.verts_b) && small.edges_b.subset_of(s.edges_b) &&
           small != s;
}

bool big_side_below(const Separation& x, const Separation& y) {
    return x.verts_b.subset_of(y.verts_b) && x.edges_b.subset_of(y.edges_b) &&
           !(x.verts_b == y.verts_b && x.edges_b == y.edges_b);
}

} // namespace

std::vector<Separation> minimal_separations(const Graph& g, const GraphTangle& t) {
    // Minimal members: no member has a strictly smaller big side, and the
    // member is not dominated inside its own big side (a member with the
    // same big side but more of the graph on the small side wins). This
    // keeps exactly the canonical representatives.
    std::vector<Separation> out;
    for (const auto& s : t.members) {
        bool minimal = true;
        for (const auto& other : t.members)
            if (big_side_below(other, s) || pair_dominates(other, s)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }

    // The retained members must reach below every member, and each one must
    // be a closed component separation: big interior one component C with
    // separator N(C) and exactly the edges meeting C on the big side.
    for (const auto& s : t.members) {
        bool covered = false;
        for (const auto& m : out)
            if (m.verts_b.subset_of(s.verts_b) && m.edges_b.subset_of(s.edges_b)) {
                covered = true;
                break;
            }
        if (!covered)
            throw std::logic_error("a member's big side is not above any minimal member");
    }
    for (const auto& s : out) {
        IdSet d = s.verts_b - s.verts_a;
        if (d.empty()) throw std::logic_error("minimal member with empty big interior");
        auto comps = components_avoiding(g, g.vertex_set() - d);
        if (comps.size() != 1)
            throw std::logic_error("minimal member whose big interior is disconnected");
        if (g.neighborhood(d) != s.separator())
            throw std::logic_error("minimal member whose separator is not N(C)");
        if (incident_edges_of_set(g, d) != s.edges_b)
            throw std::logic_error("minimal member whose big edges are not the incident edges");
    }
    return out;
}

IdSet tangle_core(const Graph& g, const GraphTangle& t) {
    IdSet core = g.vertex_set();
    for (const auto& s : t.members) core &= s.verts_b;
    IdSet from_minimal = g.vertex_set();
    for (const auto& s : minimal_separations(g, t)) from_minimal &= s.verts_b;
    if (core != from_minimal)
        throw std::logic_error("tangle core differs when restricted to minimal members");
    return core;
}

GraphTangle truncate(const GraphTangle& t, int new_order) {
    if (new_order < 1 || new_order > t.order)
        throw PreconditionError("truncate: order out of range");
    GraphTangle out;
    out.order = new_order;
    for (const auto& s : t.members)
        if (s.order() < new_order) out.members.push_back(s);
    return out;
}

bool is_extension(const GraphTangle& t, const GraphTangle& smaller) {
    for (const auto& s : smaller.members)
        if (!t.contains(s)) return false;
    return true;
}

BlockRestriction restrict_to_block(const Graph& g, const GraphTangle& t, std::uint64_t budget) {
    if (t.order != 3) throw PreconditionError("restrict_to_block: tangle order must be 3");
    GraphTangle t2 = truncate(t, 2);
    IdSet w = tangle_core(g, t2);
    InducedSubgraph ind = induced_subgraph(g, w);

    std::vector<Separation> projected;
    for (const auto& s : t.members) {
        Separation p;
        for (int v = s.verts_a.first(); v != -1; v = s.verts_a.next(v))
            if (w.contains(v)) p.verts_a.add(ind.from_parent[v]);
        for (int v = s.verts_b.first(); v != -1; v = s.verts_b.next(v))
            if (w.contains(v)) p.verts_b.add(ind.from_parent[v]);
        for (int id = 1; id <= ind.graph.edge_count(); ++id) {
            auto [u, v] = ind.graph.edge(id);
            int parent_id = g.edge_id(ind.to_parent[u], ind.to_parent[v]);
            if (s.edges_a.contains(parent_id)) p.edges_a.add(id);
            else p.edges_b.add(id);
        }
        require_valid_separation(ind.graph, p);
        projected.push_back(p);
    }
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());

    BlockRestriction out;
    out.block = w;
    out.graph = ind.graph;
    out.to_parent = ind.to_parent;
    out.tangle = GraphTangle{3, std::move(projected)};

    AxiomReport report = check_graph_tangle(out.graph, out.tangle, budget);
    if (!report.passed)
        throw std::logic_error("restriction to the core block is not a tangle (" +
                               report.summary() + ")");
    IdSet core_local = tangle_core(out.graph, out.tangle);
    IdSet core_mapped;
    for (int v = core_local.first(); v != -1; v = core_local.next(v))
        core_mapped.add(out.to_parent[v]);
    if (core_mapped != tangle_core(g, t))
        throw std::logic_error("core changed under restriction to the block");
    return out;
}

std::vector<TangleBlockPair> correspondence(const Graph& g, int order, std::uint64_t budget) {
    if (order < 1 || order > 3)
        throw PreconditionError("correspondence: order must be 1, 2 or 3");
    auto tangles = enumerate_graph_tangles(g, order, budget);

    std::vector<IdSet> expected;
    for (const auto& b : k_blocks(g, order - 1).members)
        if (order < 3 || b.size() >= 4) expected.push_back(b);
    std::sort(expected.begin(), expected.end());

    std::vector<TangleBlockPair> out;
    std::vector<IdSet> cores;
    for (auto& t : tangles) {
        IdSet core = tangle_core(g, t);
        GraphTangle rebuilt = oriented_toward(g, core, order, budget);
        if (!(rebuilt.members == t.members))
            throw std::logic_error("correspondence: tangle differs from the family oriented "
                                   "toward its core");
        cores.push_back(core);
        out.push_back({std::move(t), core});
    }
    std::sort(cores.begin(), cores.end());
    if (std::adjacent_find(cores.begin(), cores.end()) != cores.end())
        throw std::logic_error("correspondence: two tangles share a core");
    if (cores != expected) {
        std::ostringstream msg;
        msg << "correspondence: cores do not match the blocks at order " << order << " ("
            << cores.size() << " tangles vs " << expected.size() << " blocks)";
        throw std::logic_error(msg.str());
    }
    std::sort(out.begin(), out.end(), [](const TangleBlockPair& a, const TangleBlockPair& b) {
        return a.block < b.block;
    });
    return out;
}

namespace {

GraphTangle checked(const Graph& g, GraphTangle t, std::uint64_t budget, const char* what) {
    AxiomReport report = check_graph_tangle(g, t, budget);
    if (!report.passed)
        throw std::logic_error(std::string(what) + ": construction failed axiom check (" +
                               report.summary() + ")");
    return t;
}

} // namespace

GraphTangle cycle_tangle(const Graph& g, const std::vector<int>& cycle, std::uint64_t budget) {
    if (cycle.size() < 3) throw PreconditionError("cycle_tangle: cycle needs >= 3 vertices");
    IdSet verts;
    IdSet edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        if (verts.contains(u)) throw PreconditionError("cycle_tangle: repeated vertex");
        verts.add(u);
        int id = g.edge_id(u, v);
        if (id == 0) throw PreconditionError("cycle_tangle: missing cycle edge");
        edges.add(id);
    }
    GraphTangle t;
    t.order = 2;
    for (const auto& s : enumerate_separations(g, 1, budget))
        if (verts.subset_of(s.verts_b) && edges.subset_of(s.edges_b)) t.members.push_back(s);
    return checked(g, std::move(t), budget, "cycle_tangle");
}

GraphTangle clique_tangle(const Graph& g, const IdSet& clique, int order, std::uint64_t budget) {
    if (order < 1) throw PreconditionError("clique_tangle: order must be at least 1");
    auto verts = clique.elements();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.adjacent(verts[i], verts[j]))
                throw PreconditionError("clique_tangle: set is not a clique");
    if (3 * (order - 1) >= 2 * clique.size())
        throw PreconditionError("clique_tangle: order bound k < 2|X|/3 + 1 violated");
    return checked(g, oriented_toward(g, clique, order, budget), budget, "clique_tangle");
}

GraphTangle grid_tangle(const Graph& g, const std::vector<std::vector<int>>& rows,
                        std::uint64_t budget) {
    const int k = static_cast<int>(rows.size());
    if (k < 1) throw PreconditionError("grid_tangle: empty row list");
    IdSet seen;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != k)
            throw PreconditionError("grid_tangle: rows must have length equal to the row count");
        for (int v : row) {
            if (seen.contains(v)) throw PreconditionError("grid_tangle: repeated vertex");
            seen.add(v);
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (j + 1 < k && !g.adjacent(rows[i][j], rows[i][j + 1]))
                throw PreconditionError("grid_tangle: missing row edge");
            if (i + 1 < k && !g.adjacent(rows[i][j], rows[i + 1][j]))
                throw PreconditionError("grid_tangle: missing column edge");
        }

    std::vector<std::pair<IdSet, IdSet>> row_sets;
    for (const auto& row : rows) {
        IdSet verts;
        IdSet edges;
        for (int v : row) verts.add(v);
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            edges.add(g.edge_id(row[j], row[j + 1]));
        row_sets.emplace_back(verts, edges);
    }

    GraphTangle t;
    t.order = k;
    for (const auto& s : enumerate_separations(g, k - 1, budget))
        for (const auto& [rv, re] : row_sets)
            if (rv.subset_of(s.verts_b) && re.subset_of(s.edges_b)) {
                t.members.push_back(s);
                break;
            }
    return checked(g, std::move(t), budget, "grid_tangle");
}

} // namespace tangles

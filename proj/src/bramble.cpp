#include "tangles/bramble.hpp"

#include <algorithm>
#include <stdexcept>

namespace tangles {

namespace {

bool subgraph_connected(const Graph& g, const Subgraph& s) {
    int start = s.verts.first();
    if (start == -1) return false;
    IdSet seen = IdSet::of({start});
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int id = s.edges.first(); id != -1; id = s.edges.next(id)) {
            auto [a, b] = g.edge(id);
            int other = a == v ? b : (b == v ? a : 0);
            if (other != 0 && !seen.contains(other)) {
                seen.add(other);
                stack.push_back(other);
            }
        }
    }
    return seen == s.verts;
}

} // namespace

SubgraphFamily make_family(const Graph& g, std::vector<Subgraph> members) {
    for (const auto& s : members) {
        if (s.verts.empty()) throw PreconditionError("family member is empty");
        if (!s.verts.subset_of(g.vertex_set()) || !s.edges.subset_of(g.edge_id_set()))
            throw PreconditionError("family member not within the graph");
        for (int id = s.edges.first(); id != -1; id = s.edges.next(id)) {
            auto [u, v] = g.edge(id);
            if (!s.verts.contains(u) || !s.verts.contains(v))
                throw PreconditionError("family member edge leaves its vertex set");
        }
        if (!subgraph_connected(g, s))
            throw PreconditionError("family member is not connected");
    }
    return SubgraphFamily{std::move(members)};
}

namespace {

bool touch(const Graph& g, const Subgraph& a, const Subgraph& b, const Subgraph& c) {
    if (!(a.verts & b.verts & c.verts).empty()) return true;
    for (int id = 1; id <= g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        bool in_a = a.verts.contains(u) || a.verts.contains(v);
        bool in_b = b.verts.contains(u) || b.verts.contains(v);
        bool in_c = c.verts.contains(u) || c.verts.contains(v);
        if (in_a && in_b && in_c) return true;
    }
    return false;
}

} // namespace

bool touches(const Graph& g, const std::vector<Subgraph>& members, TouchMode mode) {
    const std::size_t n = members.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (mode == TouchMode::pairwise) {
                if (!touch(g, members[i], members[j], members[j])) return false;
                continue;
            }
            for (std::size_t l = j; l < n; ++l)
                if (!touch(g, members[i], members[j], members[l])) return false;
        }
    return true;
}

namespace {

void hitting_search(const Graph& g, const std::vector<Subgraph>& members, IdSet chosen,
                    std::size_t chosen_size, int& best, WorkBudget& work) {
    work.charge(1, "min_hitting_set");
    if (static_cast<int>(chosen_size) >= best) return;
    const Subgraph* unhit = nullptr;
    for (const auto& m : members)
        if (!m.verts.intersects(chosen)) {
            if (unhit == nullptr || m.verts.size() < unhit->verts.size()) unhit = &m;
        }
    if (unhit == nullptr) {
        best = static_cast<int>(chosen_size);
        return;
    }
    for (int v = unhit->verts.first(); v != -1; v = unhit->verts.next(v)) {
        IdSet next = chosen;
        next.add(v);
        hitting_search(g, members, next, chosen_size + 1, best, work);
    }
}

} // namespace

int min_hitting_set(const Graph& g, const SubgraphFamily& family, std::uint64_t budget) {
    if (family.members.empty()) throw PreconditionError("min_hitting_set: empty family");
    WorkBudget work(budget);
    int best = g.vertex_count() + 1;
    hitting_search(g, family.members, IdSet{}, 0, best, work);
    return best;
}

SubgraphFamily touching_family_from_tangle(const Graph& g, const GraphTangle& t,
                                           std::uint64_t budget) {
    WorkBudget work(budget);
    const int n = g.vertex_count();

    std::vector<Subgraph> members;
    std::vector<IdSet> seen;
    std::vector<int> pick;
    auto visit = [&](const IdSet& s) {
        work.charge(t.members.size() + 1, "touching_family_from_tangle");
        IdSet comp = big_component(g, t, s);
        if (std::find(seen.begin(), seen.end(), comp) != seen.end()) return;
        seen.push_back(comp);
        IdSet edges;
        for (int id = 1; id <= g.edge_count(); ++id) {
            auto [u, v] = g.edge(id);
            if (comp.contains(u) && comp.contains(v)) edges.add(id);
        }
        members.push_back({comp, edges});
    };
    auto gen = [&](auto&& self, int from, int want) -> void {
        if (want == 0) {
            IdSet s;
            for (int v : pick) s.add(v);
            visit(s);
            return;
        }
        for (int v = from; v <= n - want + 1; ++v) {
            pick.push_back(v);
            self(self, v + 1, want - 1);
            pick.pop_back();
        }
    };
    for (int size = 0; size < t.order; ++size) gen(gen, 1, size);

    SubgraphFamily family = make_family(g, std::move(members));
    if (!touches(g, family.members, TouchMode::triplewise))
        throw std::logic_error("tangle component family does not touch triplewise");
    if (min_hitting_set(g, family, budget) < t.order)
        throw std::logic_error("tangle component family has a small vertex cover");
    return family;
}

GraphTangle tangle_from_family(const Graph& g, const SubgraphFamily& family, int order,
                               std::uint64_t budget) {
    if (order < 1) throw PreconditionError("tangle order must be at least 1");
    if (!touches(g, family.members, TouchMode::triplewise))
        throw PreconditionError("tangle_from_family: family does not touch triplewise");
    if (min_hitting_set(g, family, budget) < order)
        throw PreconditionError("tangle_from_family: hitting number below the requested order");

    GraphTangle t;
    t.order = order;
    for (const auto& s : enumerate_separations(g, order - 1, budget)) {
        for (const auto& m : family.members)
            if (m.verts.subset_of(s.verts_b - s.verts_a)) {
                t.members.push_back(s);
                break;
            }
    }
    AxiomReport report = check_graph_tangle(g, t, budget);
    if (!report.passed)
        throw std::logic_error("family orientation failed the tangle axioms (" +
                               report.summary() + ")");
    return t;
}

} // namespace tangles

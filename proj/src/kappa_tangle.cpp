#include "tangles/kappa_tangle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tangles {

namespace {

bool member_less(std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

} // namespace

bool KappaTangle::contains(std::uint64_t x) const {
    auto it = std::lower_bound(members.begin(), members.end(), x, member_less);
    return it != members.end() && *it == x;
}

const char* to_string(KappaAxiom a) {
    switch (a) {
    case KappaAxiom::T0: return "T0";
    case KappaAxiom::T1: return "T1";
    case KappaAxiom::T2: return "T2";
    case KappaAxiom::T3: return "T3";
    }
    return "?";
}

std::string KappaAxiomReport::summary() const {
    if (passed) return "passed";
    std::ostringstream out;
    out << "violated:";
    for (const auto& v : violations) out << ' ' << to_string(v.axiom);
    return out.str();
}

namespace {

// All X with kappa(X) < order, ascending as integers.
std::vector<std::uint64_t> low_kappa_subsets(const ConnectivitySystem& sys, int order,
                                             WorkBudget& work) {
    const std::uint64_t full = sys.full_mask();
    if (sys.universe_size() > 60) throw BudgetError("universe too large to scan");
    work.require(full + 1, "low-kappa subset scan");
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0;; ++x) {
        work.charge(1, "low-kappa subset scan");
        if (sys.value(x) < order) out.push_back(x);
        if (x == full) break;
    }
    return out;
}

} // namespace

KappaAxiomReport check_kappa_tangle(const ConnectivitySystem& sys, const KappaTangle& t,
                                    std::uint64_t budget) {
    const std::uint64_t full = sys.full_mask();
    for (std::uint64_t x : t.members)
        if (x & ~full) throw PreconditionError("member has out-of-universe elements");

    WorkBudget work(budget);
    KappaAxiomReport report;
    auto flag = [&](KappaAxiom a, std::vector<std::uint64_t> witness) {
        report.passed = false;
        report.violations.push_back({a, std::move(witness)});
    };

    for (std::uint64_t x : t.members)
        if (sys.value(x) >= t.order) {
            flag(KappaAxiom::T0, {x});
            break;
        }

    for (std::uint64_t x : low_kappa_subsets(sys, t.order, work))
        if (!t.contains(x) && !t.contains(full & ~x)) {
            flag(KappaAxiom::T1, {x});
            break;
        }

    const auto& m = t.members;
    bool t2_done = false;
    for (std::size_t i = 0; i < m.size() && !t2_done; ++i)
        for (std::size_t j = i; j < m.size() && !t2_done; ++j) {
            if (m[i] & m[j]) {
                for (std::size_t l = j; l < m.size(); ++l) {
                    work.charge(1, "T2 triples");
                    if (!(m[i] & m[j] & m[l])) {
                        flag(KappaAxiom::T2, {m[i], m[j], m[l]});
                        t2_done = true;
                        break;
                    }
                }
            } else {
                flag(KappaAxiom::T2, {m[i], m[i], m[j]});
                t2_done = true;
            }
        }

    for (std::uint64_t x : t.members)
        if (std::popcount(x) == 1) {
            flag(KappaAxiom::T3, {x});
            break;
        }

    return report;
}

std::vector<KappaTangle> enumerate_kappa_tangles(const ConnectivitySystem& sys, int order,
                                                 std::uint64_t budget) {
    if (order < 0) throw PreconditionError("tangle order must be nonnegative");
    std::vector<KappaTangle> out;
    if (order == 0) {
        out.push_back(KappaTangle{0, {}});
        return out;
    }

    WorkBudget work(budget);
    auto low = low_kappa_subsets(sys, order, work);

    // Complement pairs of low-kappa subsets; exactly one side of each pair
    // joins the tangle.
    const std::uint64_t full = sys.full_mask();
    struct Pair {
        std::uint64_t side[2];
    };
    std::vector<Pair> pairs;
    for (std::uint64_t x : low) {
        std::uint64_t y = full & ~x;
        if (x <= y) pairs.push_back({{x, y}});
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& p, const Pair& q) {
        int pp = std::popcount(p.side[0]), qq = std::popcount(q.side[0]);
        if (pp != qq) return pp > qq;
        return p.side[0] < q.side[0];
    });

    const int np = static_cast<int>(pairs.size());
    std::vector<int> state(np, 0); // 0 undecided, 1/2: that side is the member
    std::vector<std::uint64_t> members;

    // Unit propagation: a candidate side X dies as soon as two members (or
    // one, counted twice) meet it in the empty set; its complement is then
    // forced. Insertions are triple-checked against the current members, so
    // no empty triple survives into a completed assignment.
    auto assign = [&](int idx, int side) -> bool {
        if (state[idx] == side) return true;
        if (state[idx] != 0) return false;
        std::uint64_t x = pairs[idx].side[side - 1];
        if (x == 0 || std::popcount(x) == 1) return false; // T2 / T3
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::uint64_t meet = x & members[i];
            if (meet == 0) return false;
            for (std::size_t j = i; j < members.size(); ++j)
                if (!(meet & members[j])) return false;
        }
        state[idx] = side;
        members.push_back(x);
        return true;
    };

    auto close = [&](std::size_t watermark) -> bool {
        for (std::size_t w = watermark; w < members.size(); ++w) {
            const std::uint64_t fresh = members[w];
            for (int i = 0; i < np; ++i) {
                if (state[i] != 0) continue;
                work.charge(1, "kappa tangle search");
                bool dead[2];
                for (int s = 0; s < 2; ++s) {
                    std::uint64_t meet = pairs[i].side[s] & fresh;
                    dead[s] = meet == 0;
                    if (!dead[s])
                        for (std::uint64_t m : members)
                            if (!(meet & m)) {
                                dead[s] = true;
                                break;
                            }
                }
                if (dead[0] && dead[1]) return false;
                if (dead[0] && !assign(i, 2)) return false;
                if (dead[1] && !assign(i, 1)) return false;
            }
        }
        return true;
    };

    // Seed: empty and singleton sides can never join a tangle.
    for (int i = 0; i < np; ++i) {
        bool bad[2];
        for (int s = 0; s < 2; ++s) {
            std::uint64_t x = pairs[i].side[s];
            bad[s] = x == 0 || std::popcount(x) == 1;
        }
        if (bad[0] && bad[1]) return out;
        if (bad[0] && !assign(i, 2)) return out;
        if (bad[1] && !assign(i, 1)) return out;
    }
    if (!close(0)) return out;

    auto search = [&](auto&& self, int from) -> void {
        work.charge(1, "kappa tangle search");
        int idx = -1;
        for (int i = from; i < np; ++i)
            if (state[i] == 0) {
                idx = i;
                break;
            }
        if (idx == -1) {
            KappaTangle t;
            t.order = order;
            t.members = members;
            std::sort(t.members.begin(), t.members.end(), member_less);
            out.push_back(std::move(t));
            return;
        }
        for (int side : {1, 2}) {
            auto saved_state = state;
            auto saved_members = members;
            std::size_t watermark = members.size();
            if (assign(idx, side) && close(watermark)) self(self, idx + 1);
            state = std::move(saved_state);
            members = std::move(saved_members);
        }
    };
    search(search, 0);

    std::sort(out.begin(), out.end(), [](const KappaTangle& a, const KappaTangle& b) {
        return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                            b.members.begin(), b.members.end(), member_less);
    });
    return out;
}

int max_tangle_order(const ConnectivitySystem& sys, std::uint64_t budget) {
    int k = 0;
    while (true) {
        if (enumerate_kappa_tangles(sys, k + 1, budget).empty()) return k;
        ++k;
    }
}

GraphTangle kappa_to_graph_tangle(const Graph& g, const KappaTangle& t, std::uint64_t budget) {
    if (t.order < 1) throw PreconditionError("translation needs order at least 1");
    if (g.edge_count() > 64)
        throw PreconditionError("vertex-connectivity translation needs at most 64 edges");
    GraphTangle out;
    out.order = t.order;
    for (const auto& s : enumerate_separations(g, t.order - 1, budget)) {
        std::uint64_t eb = 0;
        for (int id = s.edges_b.first(); id != -1; id = s.edges_b.next(id))
            eb |= std::uint64_t{1} << (id - 1);
        if (t.contains(eb)) out.members.push_back(s);
    }
    AxiomReport report = check_graph_tangle(g, out, budget);
    if (!report.passed)
        throw std::logic_error("translated kappa tangle failed the graph axioms (" +
                               report.summary() + ")");
    return out;
}

const char* to_string(ExceptionalKind k) {
    switch (k) {
    case ExceptionalKind::none: return "none";
    case ExceptionalKind::isolated_vertex: return "isolated-vertex";
    case ExceptionalKind::isolated_edge: return "isolated-edge";
    case ExceptionalKind::pendant_or_isolated_edge: return "pendant-or-isolated-edge";
    }
    return "?";
}

GraphToKappaResult graph_to_kappa_tangle(const Graph& g, const GraphTangle& t,
                                         std::uint64_t budget) {
    if (t.order < 1) throw PreconditionError("translation needs order at least 1");
    GraphToKappaResult result;
    IdSet core = tangle_core(g, t);

    if (t.order == 1 && core.size() == 1 && g.degree(core.first()) == 0) {
        result.kind = ExceptionalKind::isolated_vertex;
        result.witness = core.first();
        return result;
    }
    if (t.order <= 2 && core.size() == 2) {
        int u = core.first(), v = core.next(u);
        int id = g.edge_id(u, v);
        if (id != 0) {
            int du = g.degree(u), dv = g.degree(v);
            if (t.order == 1 && du == 1 && dv == 1) {
                result.kind = ExceptionalKind::isolated_edge;
                result.witness = id;
                return result;
            }
            if (t.order == 2 && (du == 1 || dv == 1)) {
                result.kind = ExceptionalKind::pendant_or_isolated_edge;
                result.witness = id;
                return result;
            }
        }
    }

    KappaTangle kt;
    kt.order = t.order;
    std::vector<std::uint64_t> members;
    for (const auto& s : t.members) {
        std::uint64_t eb = 0;
        for (int id = s.edges_b.first(); id != -1; id = s.edges_b.next(id))
            eb |= std::uint64_t{1} << (id - 1);
        members.push_back(eb);
    }
    std::sort(members.begin(), members.end(), member_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    kt.members = std::move(members);

    auto sys = ConnectivitySystem::vertex_connectivity(g);
    KappaAxiomReport report = check_kappa_tangle(sys, kt, budget);
    if (!report.passed)
        throw std::logic_error("translated graph tangle failed the kappa axioms (" +
                               report.summary() + ") despite no exceptional case");
    result.tangle = std::move(kt);
    return result;
}

} // namespace tangles

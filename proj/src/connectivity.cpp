#include "tangles/connectivity.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>

namespace tangles {

int gf2_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (int bit = 63; bit >= 0; --bit) {
        std::uint64_t mask = std::uint64_t{1} << bit;
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && (rows[r] & mask)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

std::string MatroidOracle::element_name(int i) const { return "x" + std::to_string(i); }

GraphicMatroid::GraphicMatroid(Graph g) : g_(std::move(g)) {
    if (g_.edge_count() > 64) throw PreconditionError("graphic matroid: more than 64 elements");
}

int GraphicMatroid::rank(std::uint64_t subset) const {
    // n minus the number of components of (V, subset).
    std::vector<int> parent(g_.vertex_count() + 1);
    for (int v = 1; v <= g_.vertex_count(); ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = g_.vertex_count();
    for (int id = 1; id <= g_.edge_count(); ++id) {
        if (!(subset & (std::uint64_t{1} << (id - 1)))) continue;
        auto [u, v] = g_.edge(id);
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return g_.vertex_count() - components;
}

std::string GraphicMatroid::element_name(int i) const {
    auto [u, v] = g_.edge(i);
    return "e" + std::to_string(i) + "(" + std::to_string(u) + "-" + std::to_string(v) + ")";
}

BinaryMatroid::BinaryMatroid(int rows, int cols, std::vector<std::vector<int>> matrix)
    : cols_(cols) {
    if (cols < 0 || cols > 64) throw PreconditionError("binary matroid: need 0..64 columns");
    if (rows < 0 || rows > 64) throw PreconditionError("binary matroid: need 0..64 rows");
    if (static_cast<int>(matrix.size()) != rows)
        throw ParseError("binary matroid: wrong row count");
    columns_.assign(cols, 0);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(matrix[r].size()) != cols)
            throw ParseError("binary matroid: wrong column count");
        for (int c = 0; c < cols; ++c) {
            if (matrix[r][c] != 0 && matrix[r][c] != 1)
                throw ParseError("binary matroid: entries must be 0 or 1");
            if (matrix[r][c]) columns_[c] |= std::uint64_t{1} << r;
        }
    }
}

int BinaryMatroid::rank(std::uint64_t subset) const {
    std::vector<std::uint64_t> rows;
    for (int c = 0; c < cols_; ++c)
        if (subset & (std::uint64_t{1} << c)) rows.push_back(columns_[c]);
    return gf2_rank(std::move(rows));
}

ConnectivitySystem ConnectivitySystem::edge_connectivity(const Graph& g) {
    auto graph = std::make_shared<const Graph>(g);
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::edge_connectivity;
    impl->size = g.vertex_count();
    if (impl->size > 64) throw PreconditionError("connectivity system: universe above 64");
    for (int v = 1; v <= g.vertex_count(); ++v) impl->names.push_back("v" + std::to_string(v));
    impl->graph = graph;
    impl->eval = [graph](std::uint64_t x) {
        int crossing = 0;
        for (int id = 1; id <= graph->edge_count(); ++id) {
            auto [u, v] = graph->edge(id);
            bool iu = x & (std::uint64_t{1} << (u - 1));
            bool iv = x & (std::uint64_t{1} << (v - 1));
            if (iu != iv) ++crossing;
        }
        return crossing;
    };
    ConnectivitySystem sys;
    sys.impl_ = std::move(impl);
    return sys;
}

ConnectivitySystem ConnectivitySystem::vertex_connectivity(const Graph& g) {
    auto graph = std::make_shared<const Graph>(g);
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::vertex_connectivity;
    impl->size = g.edge_count();
    if (impl->size > 64) throw PreconditionError("connectivity system: universe above 64");
    for (int id = 1; id <= g.edge_count(); ++id) impl->names.push_back("e" + std::to_string(id));
    impl->graph = graph;
    // Per-vertex incident edge masks; kappa counts vertices incident to both
    // sides of the edge bipartition.
    std::vector<std::uint64_t> incident(g.vertex_count() + 1, 0);
    for (int id = 1; id <= g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        incident[u] |= std::uint64_t{1} << (id - 1);
        incident[v] |= std::uint64_t{1} << (id - 1);
    }
    std::uint64_t full = g.edge_count() == 64 ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << g.edge_count()) - 1;
    impl->eval = [incident, full, n = g.vertex_count()](std::uint64_t x) {
        int count = 0;
        for (int v = 1; v <= n; ++v)
            if ((incident[v] & x) && (incident[v] & full & ~x)) ++count;
        return count;
    };
    ConnectivitySystem sys;
    sys.impl_ = std::move(impl);
    return sys;
}

ConnectivitySystem ConnectivitySystem::cut_rank(const Graph& g) {
    auto graph = std::make_shared<const Graph>(g);
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::cut_rank;
    impl->size = g.vertex_count();
    if (impl->size > 64) throw PreconditionError("connectivity system: universe above 64");
    for (int v = 1; v <= g.vertex_count(); ++v) impl->names.push_back("v" + std::to_string(v));
    impl->graph = graph;
    std::vector<std::uint64_t> adjacency(g.vertex_count() + 1, 0);
    for (int id = 1; id <= g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        adjacency[u] |= std::uint64_t{1} << (v - 1);
        adjacency[v] |= std::uint64_t{1} << (u - 1);
    }
    impl->eval = [adjacency, n = g.vertex_count()](std::uint64_t x) {
        std::vector<std::uint64_t> rows;
        for (int v = 1; v <= n; ++v)
            if (x & (std::uint64_t{1} << (v - 1))) rows.push_back(adjacency[v] & ~x);
        return gf2_rank(std::move(rows));
    };
    ConnectivitySystem sys;
    sys.impl_ = std::move(impl);
    return sys;
}

ConnectivitySystem ConnectivitySystem::matroid(std::shared_ptr<const MatroidOracle> oracle) {
    if (!oracle) throw PreconditionError("connectivity system: null matroid oracle");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::matroid;
    impl->size = oracle->ground_size();
    if (impl->size > 64) throw PreconditionError("connectivity system: universe above 64");
    for (int i = 1; i <= impl->size; ++i) impl->names.push_back(oracle->element_name(i));
    std::uint64_t full = impl->size == 64 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << impl->size) - 1;
    int total_rank = oracle->rank(full);
    impl->eval = [oracle, full, total_rank](std::uint64_t x) {
        return oracle->rank(x) + oracle->rank(full & ~x) - total_rank;
    };
    ConnectivitySystem sys;
    sys.impl_ = std::move(impl);
    return sys;
}

std::uint64_t ConnectivitySystem::full_mask() const {
    return impl_->size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << impl_->size) - 1;
}

const std::string& ConnectivitySystem::element_name(int i) const {
    if (i < 1 || i > impl_->size) throw PreconditionError("element id out of universe");
    return impl_->names[i - 1];
}

int ConnectivitySystem::value(std::uint64_t subset) const {
    if (subset & ~full_mask()) throw PreconditionError("subset has out-of-universe elements");
    std::uint64_t key = std::min(subset, full_mask() & ~subset);
    {
        std::lock_guard<std::mutex> lock(impl_->mutex);
        auto it = impl_->memo.find(key);
        if (it != impl_->memo.end()) return it->second;
    }
    int v = impl_->eval(subset);
    std::lock_guard<std::mutex> lock(impl_->mutex);
    impl_->memo.emplace(key, v);
    return v;
}

SystemAxiomReport verify_axioms(const ConnectivitySystem& sys, int sample_pairs,
                                std::uint32_t seed) {
    SystemAxiomReport report;
    const int n = sys.universe_size();
    auto fail = [&](std::string what, std::vector<std::uint64_t> witness) {
        report.passed = false;
        report.failure = std::move(what);
        report.witness = std::move(witness);
    };

    if (sys.value(0) != 0) {
        fail("kappa(empty) != 0", {0});
        return report;
    }

    if (n <= 12) {
        std::uint64_t full = sys.full_mask();
        for (std::uint64_t x = 0; x <= full; ++x)
            if (sys.value(x) != sys.value(full & ~x)) {
                fail("symmetry violated", {x});
                return report;
            }
        for (std::uint64_t x = 0; x <= full; ++x)
            for (std::uint64_t y = x; y <= full; ++y)
                if (sys.value(x) + sys.value(y) < sys.value(x & y) + sys.value(x | y)) {
                    fail("submodularity violated", {x, y});
                    return report;
                }
        return report;
    }

    if (sample_pairs <= 0)
        throw PreconditionError("verify_axioms: universe above 12 needs a sample count");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, sys.full_mask());
    for (int i = 0; i < sample_pairs; ++i) {
        std::uint64_t x = dist(rng), y = dist(rng);
        if (sys.value(x) != sys.value(sys.full_mask() & ~x)) {
            fail("symmetry violated", {x});
            return report;
        }
        if (sys.value(x) + sys.value(y) < sys.value(x & y) + sys.value(x | y)) {
            fail("submodularity violated", {x, y});
            return report;
        }
    }
    return report;
}

std::shared_ptr<const MatroidOracle> parse_matroid(std::istream& in) {
    std::string kind;
    if (!(in >> kind)) throw ParseError("empty matroid input");
    if (kind == "graphic") {
        std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return std::make_shared<GraphicMatroid>(parse_graph_text(rest));
    }
    if (kind == "rank-matrix") {
        int rows = 0, cols = 0;
        if (!(in >> rows >> cols) || rows < 0 || cols < 0)
            throw ParseError("rank-matrix header needs two nonnegative sizes");
        std::vector<std::vector<int>> matrix(rows, std::vector<int>(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (!(in >> matrix[r][c])) throw ParseError("rank-matrix: missing entries");
        return std::make_shared<BinaryMatroid>(rows, cols, std::move(matrix));
    }
    throw ParseError("matroid input must start with 'graphic' or 'rank-matrix'");
}

} // namespace tangles

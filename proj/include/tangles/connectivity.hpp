#pragma once

#include "tangles/errors.hpp"
#include "tangles/graph.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace tangles {

// GF(2) rank of a list of row bit-vectors.
int gf2_rank(std::vector<std::uint64_t> rows);

// Matroid rank oracle over a ground set 1..N (subsets as bit masks with
// element i at bit i-1).
class MatroidOracle {
public:
    virtual ~MatroidOracle() = default;
    virtual int ground_size() const = 0;
    virtual int rank(std::uint64_t subset) const = 0;
    virtual std::string element_name(int i) const;
};

// rank(X) = n - #components of (V, X).
class GraphicMatroid : public MatroidOracle {
public:
    explicit GraphicMatroid(Graph g);
    int ground_size() const override { return g_.edge_count(); }
    int rank(std::uint64_t subset) const override;
    std::string element_name(int i) const override;
    const Graph& graph() const { return g_; }

private:
    Graph g_;
};

// Linear matroid over GF(2): elements are the columns of a 0/1 matrix.
class BinaryMatroid : public MatroidOracle {
public:
    BinaryMatroid(int rows, int cols, std::vector<std::vector<int>> matrix);
    int ground_size() const override { return cols_; }
    int rank(std::uint64_t subset) const override;

private:
    int cols_;
    std::vector<std::uint64_t> columns_; // column -> row bitmask
};

// A finite universe 1..N with a symmetric submodular kappa given by a
// concrete backing (graph or matroid). Evaluations are memoized under the
// complement symmetry; copies share the memo table, which is mutex guarded.
class ConnectivitySystem {
public:
    enum class Kind { edge_connectivity, vertex_connectivity, cut_rank, matroid };

    // nu_G on V(G): edges between X and its complement.
    static ConnectivitySystem edge_connectivity(const Graph& g);
    // kappa_G on E(G): vertices incident to both sides.
    static ConnectivitySystem vertex_connectivity(const Graph& g);
    // rho_G on V(G): GF(2) rank of the adjacency block between X and X-bar.
    static ConnectivitySystem cut_rank(const Graph& g);
    // kappa_M(X) = r(X) + r(X-bar) - r(E).
    static ConnectivitySystem matroid(std::shared_ptr<const MatroidOracle> oracle);

    Kind kind() const { return impl_->kind; }
    int universe_size() const { return impl_->size; }
    std::uint64_t full_mask() const;
    const std::string& element_name(int i) const;
    const Graph* backing_graph() const { return impl_->graph ? &*impl_->graph : nullptr; }

    // kappa(subset); throws PreconditionError on out-of-universe bits.
    int value(std::uint64_t subset) const;

private:
    struct Impl {
        Kind kind;
        int size = 0;
        std::vector<std::string> names;
        std::function<int(std::uint64_t)> eval;
        std::shared_ptr<const Graph> graph; // set for graph-backed kinds
        mutable std::mutex mutex;
        mutable std::unordered_map<std::uint64_t, int> memo;
    };
    std::shared_ptr<Impl> impl_;
};

struct SystemAxiomReport {
    bool passed = true;
    std::string failure; // first counterexample, human-readable
    std::vector<std::uint64_t> witness;
};

// Normalisation, symmetry and submodularity. Exhaustive when the universe
// has at most 12 elements; above that a sample count must be supplied.
SystemAxiomReport verify_axioms(const ConnectivitySystem& sys, int sample_pairs = 0,
                                std::uint32_t seed = 1);

// Matroid file: "rank-matrix N M" followed by an N x M 0/1 matrix, or
// "graphic" followed by a graph in the usual text format.
std::shared_ptr<const MatroidOracle> parse_matroid(std::istream& in);

} // namespace tangles

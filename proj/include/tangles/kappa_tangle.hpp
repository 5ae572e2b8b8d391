#pragma once

#include "tangles/connectivity.hpp"
#include "tangles/errors.hpp"
#include "tangles/graph_tangle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tangles {

// A tangle of order k on a connectivity system: the chosen "big" subsets.
//   T0  kappa(X) < k for all members
//   T1  every X with kappa(X) < k has X or its complement as a member
//   T2  any three members intersect
//   T3  no singleton members
// The empty member set is the unique tangle of order 0.
struct KappaTangle {
    int order = 0;
    std::vector<std::uint64_t> members; // sorted by (popcount, value)

    bool contains(std::uint64_t x) const;
};

enum class KappaAxiom { T0, T1, T2, T3 };

const char* to_string(KappaAxiom a);

struct KappaAxiomViolation {
    KappaAxiom axiom;
    std::vector<std::uint64_t> witness;
};

struct KappaAxiomReport {
    bool passed = true;
    std::vector<KappaAxiomViolation> violations;
    std::string summary() const;
};

// Verifies T0-T3 against the full enumeration of low-kappa subsets; first
// witness per violated axiom.
KappaAxiomReport check_kappa_tangle(const ConnectivitySystem& sys, const KappaTangle& t,
                                    std::uint64_t budget = kDefaultWorkBudget);

// All tangles of order exactly `order`: backtracking over complement pairs
// of low-kappa subsets with singleton filtering, superset propagation and
// incremental triple checks.
std::vector<KappaTangle> enumerate_kappa_tangles(const ConnectivitySystem& sys, int order,
                                                 std::uint64_t budget = kDefaultWorkBudget);

// Largest k with a tangle of order k; 0 when only the empty tangle exists.
int max_tangle_order(const ConnectivitySystem& sys,
                     std::uint64_t budget = kDefaultWorkBudget);

// Translation of a vertex-connectivity tangle into a graph tangle: orient
// (A, B) toward B iff E(B) is a member. Axiom-checked.
GraphTangle kappa_to_graph_tangle(const Graph& g, const KappaTangle& t,
                                  std::uint64_t budget = kDefaultWorkBudget);

// The three shapes of graph tangles that vanish under translation.
enum class ExceptionalKind {
    none,
    isolated_vertex,          // order 1, core is a degree-0 vertex
    isolated_edge,            // order 1, core is an edge with both ends degree 1
    pendant_or_isolated_edge, // order 2, core is an edge with an end of degree 1
};

const char* to_string(ExceptionalKind k);

struct GraphToKappaResult {
    ExceptionalKind kind = ExceptionalKind::none;
    int witness = 0; // vertex id for isolated_vertex, else edge id
    std::optional<KappaTangle> tangle;
};

// Translation of a graph tangle into a vertex-connectivity tangle, or the
// structurally detected exceptional case. The translated family is
// additionally axiom-checked (the detection must be exact).
GraphToKappaResult graph_to_kappa_tangle(const Graph& g, const GraphTangle& t,
                                         std::uint64_t budget = kDefaultWorkBudget);

} // namespace tangles

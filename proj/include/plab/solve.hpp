#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plab/graph.hpp"
#include "plab/labelling.hpp"

namespace plab {

enum class Invariant { lambda, no_hole_lambda, sigma, no_hole_sigma, chromatic };

std::string invariant_name(Invariant inv);

struct SolveOptions {
    // Oracle mode scans every candidate value from the bottom with plain
    // exhaustive backtracking: no clique seeding, no symmetry breaking, no
    // ordering heuristics, no auxiliary pruning.
    bool oracle = false;
    unsigned long long node_budget = 100000000ULL;
};

struct SolveResult {
    Invariant invariant = Invariant::lambda;
    enum class Status { finite, infinite, unresolved } status = Status::finite;
    int value = -1;
    // When the node budget runs out the answer is bracketed instead of wrong.
    int bracket_lo = -1;
    int bracket_hi = -1;
    std::optional<Labelling> witness;
    unsigned long long nodes = 0;

    bool finite() const { return status == Status::finite; }
    bool infinite() const { return status == Status::infinite; }
};

// Decision form: a labelling into {0..k} meeting the constraints, or nullopt
// after exhausting the search.
std::optional<Labelling> feasible_linear(const Graph& g, const HVector& h,
                                         int k, const SolveOptions& opts = {});

SolveResult lambda_exact(const Graph& g, const HVector& h,
                         const SolveOptions& opts = {});
SolveResult nlambda_exact(const Graph& g, const HVector& h,
                          const SolveOptions& opts = {});
SolveResult sigma_exact(const Graph& g, const HVector& h,
                        const SolveOptions& opts = {});
SolveResult nsigma_exact(const Graph& g, const HVector& h,
                         const SolveOptions& opts = {});
SolveResult chromatic_exact(const Graph& g, const SolveOptions& opts = {});

SolveResult solve_invariant(Invariant inv, const Graph& g, const HVector& h,
                            const SolveOptions& opts = {});

struct CertificateResult {
    bool accepted = false;
    std::optional<int> diameter;  // of the induced subgraph
    int bound = 0;                // |S| - 1 when accepted
};

// Vertices of an induced subgraph with diameter <= l must take pairwise
// distinct labels under any labelling whose separations are all >= 1, so a
// set of size s certifies the lower bound s - 1 for all four invariants.
CertificateResult certificate_check(const Graph& g, const std::vector<int>& set,
                                    int l);

}  // namespace plab

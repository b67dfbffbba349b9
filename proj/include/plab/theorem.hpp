#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plab/construct.hpp"
#include "plab/graph.hpp"
#include "plab/labelling.hpp"
#include "plab/product.hpp"
#include "plab/solve.hpp"

namespace plab {

struct ConditionCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
};

// Strict product condition: q_1...q_{l-1} > 3(min+1)q.
ConditionCheck check_product_condition(const std::vector<int>& prefix_orders,
                                       int q);

// Hamming form of the same condition over sorted orders q_1 >= ... >= q_d:
// q_1...q_{l-1} > 3(q_{l-1}+1) q_l...q_d, for 3 <= l < d.
ConditionCheck check_hamming_condition(const std::vector<int>& orders, int l);

// (d + 4 + max(4-q, 0))/2 <= l < d, evaluated without integer truncation.
ConditionCheck check_hypercube_condition(int d, int q, int l);

// Ball-size necessary condition: q_1...q_l >= sum over nonempty coordinate
// subsets of size <= floor(l/2) of the products of (q_j - 1).
ConditionCheck necessary_ball_condition(const std::vector<int>& orders, int l);

// Neighbourhood necessary condition: q_1...q_l >= h + sum(q_i - 1).
ConditionCheck necessary_neighbor_condition(const std::vector<int>& orders,
                                            int l, int h);

// One factor description: a generator by name or an explicit edge list.
struct FactorSpec {
    std::string kind;  // complete | path | cycle | star | edges
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // kind == edges
};

struct InstanceSpec {
    std::string name;
    std::vector<FactorSpec> factors;
    int l = 0;
    int h = 1;
    int separation = 1;  // target q_l
    // Optional vertex set of the last split factor spanning the certificate
    // (the general-construction route); empty means the canonical route.
    std::vector<int> gstar;
    // Renumber a product tail so slice residues follow digit sums. Without it
    // row-major tails put same-residue slices next to each other and the
    // induction dead-ends immediately.
    bool residue_numbered_tail = true;
    std::uint64_t seed = 1;
    int samples = 20;
    double density = 0.5;
};

// A realized instance: prefix factors G_1..G_{l-1}, the combined last factor,
// and the full product in that order.
struct Instance {
    std::string name;
    std::vector<Graph> prefix;
    Graph tail;
    int l = 0;
    int h = 1;
    int separation = 1;
    std::vector<int> gstar;
    std::vector<int> all_orders;  // orders of the d described factors
    ProductGraph product;
    InstanceSpec spec;

    long long target() const;  // q_1...q_{l-1} * separation - 1
};

Graph build_factor(const FactorSpec& spec);

// Combines tail factors into one graph. With residue numbering the vertices
// are reordered so that index mod q_l equals the digit sum mod q_l, which
// keeps same-residue slices at distance >= 2 whenever every tail order is at
// most q_l. Falls back to the row-major order when the classes do not split
// evenly.
Graph combine_tail(const std::vector<Graph>& tail_factors, int separation,
                   bool residue_numbering);

Instance realize(const InstanceSpec& spec);

class CertificateMissing : public std::runtime_error {
public:
    explicit CertificateMissing(const std::string& why)
        : std::runtime_error(why) {}
};

// Vertex set of the canonical certificate subgraph of the instance's product:
// all prefix digits crossed with a clique of size q_l in the tail, or, when a
// gstar set is supplied, the first prefix factor crossed with gstar (middle
// coordinates pinned to 0). Throws CertificateMissing when neither route
// yields a set of the right order.
std::vector<int> canonical_certificate(const Instance& inst);

struct CertificateReport {
    std::vector<int> vertices;
    int order = 0;
    std::optional<int> diameter;
    bool accepted = false;
    long long bound = -1;
};

struct ExperimentReport {
    std::string instance;
    int l = 0, h = 0, separation = 0;
    long long target = -1;

    std::vector<ConditionCheck> conditions;
    bool hypothesis_ok = false;

    bool constructed = false;
    int stuck_step = -1;
    int constructed_span = -1;

    bool cyclic_ok = false;
    bool linear_ok = false;
    bool no_hole_cyclic_ok = false;
    bool no_hole_linear_ok = false;

    CertificateReport certificate;

    bool chi_ok = false;
    long long chi = -1;
    long long chi_pairs_checked = 0;

    bool reproduced = false;
    // set when reproduced: lambda = nlambda = sigma = nsigma = target
    std::optional<long long> invariant_value;

    std::map<std::string, double> timings_ms;

    std::optional<ConstructionResult> construction;
};

// Construct, verify all four families, certify the lower bound and certify
// the chromatic number of the l-th power. Degrades to a partial report when
// the construction is stuck.
ExperimentReport run_theorem_experiment(const Instance& inst);

// X on V(H): all edges induced by the certificate set plus a Bernoulli
// sample of the remaining edges of H. Deterministic per seed.
Graph sandwich_sample(const ProductGraph& product,
                      const std::vector<int>& certificate, double density,
                      std::uint64_t seed);

struct SandwichSampleReport {
    std::uint64_t seed = 0;
    long long edge_count = 0;
    bool linear_ok = false;
    bool cyclic_ok = false;
    bool no_hole_linear_ok = false;
    bool no_hole_cyclic_ok = false;
    bool span_ok = false;
    bool bijection_ok = false;
    bool chi_ok = false;
    bool reproduced = false;
};

struct SandwichReport {
    ExperimentReport base;
    std::vector<SandwichSampleReport> samples;
    bool all_reproduced = false;
};

SandwichReport run_sandwich_experiment(const Instance& inst, int samples,
                                       double density, std::uint64_t seed);

// Emits an instance following the general (non-Hamming) recipe: a large
// complete first factor, small middle factors, and a last factor of order q
// containing a spanning-certificate subgraph of diameter l-1. Every
// hypothesis is machine-checked; violations throw invalid_argument.
InstanceSpec section4_instance(int q1, int l, const std::vector<int>& mids,
                               int separation, int q);

}  // namespace plab

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "plab/graph.hpp"
#include "plab/labelling.hpp"
#include "plab/radix.hpp"

namespace plab {

// Offset vectors, one per slice of the last factor processed so far.
// vectors[0] is always the zero vector.
struct OffsetSet {
    std::vector<std::vector<int>> vectors;

    int slices() const { return static_cast<int>(vectors.size()); }
};

// Everything the inductive construction needs about one instance
// H = G_1 * ... * G_{m} * G (m = l-1 prefix factors, G the last factor).
// The prefix factors are permuted so the minimum-order one sits last;
// `permutation[i]` is the original index of the factor at construction
// position i. Labels are evaluated in construction coordinates.
struct ConstructionContext {
    std::vector<Graph> prefix;        // permuted
    Graph last;
    std::vector<int> permutation;
    int l = 0;                        // tuple length = prefix.size() + 1
    int separation = 0;               // required separation at distance 1
    RadixSpec spec;                   // radices: permuted prefix orders + separation
    int modulus = 0;                  // full label range
    int prefix_count = 0;             // number of digit-prefix combinations

    std::vector<std::vector<int>> prefix_digits;  // [p] -> digit vector
    std::vector<std::vector<int>> prefix_dist;    // -1 = unreachable
    std::vector<std::vector<int>> last_dist;      // -1 = unreachable

    int last_order() const { return last.order(); }
    int weight(int i) const { return static_cast<int>(spec.suffix[static_cast<std::size_t>(i) + 1]); }
};

ConstructionContext make_construction_context(
    const std::vector<Graph>& prefix_factors, const Graph& last,
    int separation);

// Label of the vertex with the given (construction-order) prefix digits in
// the given slice, under the offsets defined so far.
int evaluate_label(const ConstructionContext& ctx, const OffsetSet& offsets,
                   const std::vector<int>& prefix_digits, int slice);

// Whether the pair (prefix u in slice su, prefix v in slice sv) meets its
// separation threshold under `offsets`: full separation at distance 1, at
// least 1 at distances 2..l, nothing beyond l.
bool slice_pair_ok(const ConstructionContext& ctx, const OffsetSet& offsets,
                   int u_prefix, int u_slice, int v_prefix, int v_slice);

// Weighted per-digit difference encoding of candidate against a base offset.
long long shift_encoding(const ConstructionContext& ctx,
                         const std::vector<int>& base,
                         const std::vector<int>& candidate);

// The counting argument's quick screen: accepts the candidate when the shift
// encoding sits at cyclic distance >= 2*separation from zero. Advisory only;
// candidate selection always runs the direct pair checks (see the note in
// choose_offset's implementation for why this cannot replace them).
bool prefilter_accepts(const ConstructionContext& ctx,
                       const std::vector<int>& base,
                       const std::vector<int>& candidate);

struct PairViolation {
    std::vector<int> candidate;  // offset vector that failed
    std::vector<int> u_digits;
    int u_slice = 0;
    std::vector<int> v_digits;
    int v_slice = 0;
    int distance = 0;
    int required = 0;
    int observed = 0;
};

class ConstructionStuck : public std::runtime_error {
public:
    ConstructionStuck(int step, std::vector<PairViolation> rejected);

    int step;                              // slice with no viable offset
    std::vector<PairViolation> rejected;   // first violation per candidate
};

// Lexicographically smallest offset vector for slice t such that every pair
// touching slice t (against slices 0..t) meets its threshold. Throws
// ConstructionStuck when no candidate survives. `offsets` must cover slices
// 0..t-1.
std::vector<int> choose_offset(const ConstructionContext& ctx,
                               const OffsetSet& offsets, int t,
                               long long* rejected_count = nullptr);

struct ConstructionResult {
    Labelling labelling;                  // cyclic, on the original product order
    OffsetSet offsets;
    std::vector<int> permutation;
    std::vector<long long> rejected_per_step;  // offsets tried before success, t = 1..q-1
    bool hypothesis_holds = false;        // the sufficient product condition
    int modulus = 0;
};

// Runs the full induction over the slices of `last` and returns a no-hole
// cyclic labelling with modulus q_1...q_{l-1}*separation, verified internally
// before returning. The product condition is checked and reported but not
// enforced; when an induction step runs out of candidates the error carries
// the per-candidate evidence.
ConstructionResult construct_labelling(const std::vector<Graph>& prefix_factors,
                                       const Graph& last, int separation);

}  // namespace plab

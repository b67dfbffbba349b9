#pragma once

#include <compare>
#include <vector>

#include "plab/graph.hpp"

namespace plab {

// Separation tuple (h_1, ..., h_l). Verifiers accept any nonnegative entries;
// solvers and constructors demand a nonincreasing tuple.
struct HVector {
    std::vector<int> h;

    int classes() const { return static_cast<int>(h.size()); }
    bool monotone() const;
    int at(int distance) const { return h[static_cast<std::size_t>(distance - 1)]; }
};

HVector hvector(std::vector<int> entries);
HVector separation_tuple(int h1, int length);  // (h1, 1, ..., 1)

enum class LabelMode { linear, cyclic };

struct Labelling {
    LabelMode mode = LabelMode::linear;
    int modulus = 0;  // meaningful in cyclic mode only
    std::vector<int> labels;
};

// Linear labellings are normalised on ingest so the smallest label is 0.
Labelling linear_labelling(std::vector<int> labels);
Labelling cyclic_labelling(std::vector<int> labels, int k);

int cyclic_distance(int x, int y, int k);

// max - min for linear labellings, k - 1 for cyclic ones.
int span(const Labelling& phi);

struct Violation {
    int u = 0, v = 0;
    int distance = 0;
    int required = 0;
    int observed = 0;
    auto operator<=>(const Violation&) const = default;
};

struct VerificationReport {
    bool pass = true;
    std::vector<Violation> violations;          // sorted lexicographically
    std::vector<long long> pairs_checked;       // [i-1] = pairs at distance i
    bool no_hole = false;

    long long total_pairs() const;
};

// Sweeps every unordered pair within distance l (= h.classes()) via bounded
// BFS per source; pairs beyond reach of each other are unconstrained. The
// sweep may be partitioned by source across `threads` workers; reports merge
// deterministically.
VerificationReport verify_linear(const Graph& g, const HVector& h,
                                 const Labelling& phi, int threads = 1);
VerificationReport verify_cyclic(const Graph& g, const HVector& h,
                                 const Labelling& phi, int k, int threads = 1);

bool no_hole_linear(const Labelling& phi);
bool no_hole_cyclic(const Labelling& phi, int k);

// Labels copied verbatim in the order of `vertices`; mode preserved.
Labelling restrict_labelling(const Labelling& phi,
                             const std::vector<int>& vertices);

struct ColouringReport {
    bool proper = false;
    int colours = 0;  // span + 1
    long long pairs_checked = 0;
    std::vector<Violation> clashes;
};

// Reads the labelling as a colouring of g^l: proper iff labels are pairwise
// distinct on every pair within distance l.
ColouringReport colouring_from_labelling(const Graph& g, int l,
                                         const Labelling& phi);

}  // namespace plab

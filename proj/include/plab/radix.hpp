#pragma once

#include <vector>

namespace plab {

// Mixed-radix positional system over digit bounds q_1..q_m. suffix[i] is the
// product of radices i..m-1 (so suffix[0] is the total count and suffix[m] is
// 1); digit i carries weight suffix[i+1].
struct RadixSpec {
    std::vector<int> radices;
    std::vector<long long> suffix;

    int digits() const { return static_cast<int>(radices.size()); }
    long long total() const { return suffix.empty() ? 1 : suffix[0]; }
};

RadixSpec radix_spec(const std::vector<int>& radices);

long long radix_encode(const RadixSpec& spec, const std::vector<int>& digits);
std::vector<int> radix_decode(const RadixSpec& spec, long long value);

// Unique representative of x modulo q_last in {0, ..., q_last-1}.
int slice_residue(long long x, int q_last);

}  // namespace plab

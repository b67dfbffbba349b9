#include "plab/radix.hpp"

#include <limits>
#include <stdexcept>

namespace plab {

RadixSpec radix_spec(const std::vector<int>& radices) {
    if (radices.empty()) throw std::invalid_argument("radix spec needs digits");
    RadixSpec spec;
    spec.radices = radices;
    spec.suffix.assign(radices.size() + 1, 1);
    for (std::size_t i = radices.size(); i-- > 0;) {
        if (radices[i] < 1)
            throw std::invalid_argument("radix spec: every bound must be >= 1");
        spec.suffix[i] = spec.suffix[i + 1] * radices[i];
        if (spec.suffix[i] > std::numeric_limits<long long>::max() / 2)
            throw std::invalid_argument("radix spec overflow");
    }
    return spec;
}

long long radix_encode(const RadixSpec& spec, const std::vector<int>& digits) {
    if (static_cast<int>(digits.size()) != spec.digits())
        throw std::invalid_argument("radix encode: wrong digit count");
    long long value = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= spec.radices[i])
            throw std::invalid_argument("radix encode: digit out of range");
        value += digits[i] * spec.suffix[i + 1];
    }
    return value;
}

std::vector<int> radix_decode(const RadixSpec& spec, long long value) {
    if (value < 0 || value >= spec.total())
        throw std::invalid_argument("radix decode: value out of range");
    std::vector<int> digits(static_cast<std::size_t>(spec.digits()));
    for (std::size_t i = 0; i < digits.size(); ++i) {
        digits[i] = static_cast<int>(value / spec.suffix[i + 1]);
        value %= spec.suffix[i + 1];
    }
    return digits;
}

int slice_residue(long long x, int q_last) {
    if (q_last < 1) throw std::invalid_argument("slice residue: modulus >= 1");
    if (x < 0) throw std::invalid_argument("slice residue: negative input");
    return static_cast<int>(x % q_last);
}

}  // namespace plab

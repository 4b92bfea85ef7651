#ifndef CYBE_RNG_HPP
#define CYBE_RNG_HPP

#include <cstdint>

#include "cybe/rational.hpp"

namespace cybe {

/// Deterministic 64-bit generator (splitmix64). Every randomized check in the
/// library and the test suites takes an explicit seed through this.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Small rational with numerator in [-bound, bound], denominator in [1, den_bound].
    Rational rational(long bound = 5, long den_bound = 4) {
        return Rational(range(-bound, bound), range(1, den_bound));
    }

    /// Same, but never zero.
    Rational nonzero_rational(long bound = 5, long den_bound = 4) {
        Rational r = rational(bound, den_bound);
        while (r.is_zero()) r = rational(bound, den_bound);
        return r;
    }
};

}  // namespace cybe

#endif

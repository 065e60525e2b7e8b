#pragma once

#include <cstdint>
#include <vector>

#include "mcperm/rational.hpp"

namespace mcperm {

// SplitMix64. Fixed algorithm so that seeded runs reproduce bit-for-bit on
// every platform; std:: distributions are not portable across standard
// libraries.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1. Rejection sampling keeps the
    // stream deterministic and unbiased.
    uint64_t below(uint64_t bound) {
        const uint64_t limit = bound * (UINT64_MAX / bound);
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    // Uniform integer in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

  private:
    uint64_t state_;
};

// Independent per-trial stream derived from (seed, index). Trials can run
// in any order or in parallel and still see identical randomness.
inline SplitMix64 trial_rng(uint64_t seed, uint64_t index) {
    return SplitMix64(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

// Rational in [-bound, bound] with denominator <= max_den.
inline Rational random_rational(SplitMix64& rng, long bound, long max_den) {
    const long den = static_cast<long>(rng.range(1, max_den));
    const long num = static_cast<long>(rng.range(-bound * den, bound * den));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Rational in (0, bound] with denominator <= max_den.
inline Rational random_positive_rational(SplitMix64& rng, long bound, long max_den) {
    const long den = static_cast<long>(rng.range(1, max_den));
    const long num = static_cast<long>(rng.range(1, bound * den));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace mcperm

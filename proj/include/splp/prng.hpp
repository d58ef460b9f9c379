#pragma once

#include <cstdint>

namespace splp {

// Deterministic 64-bit mixing generator (splitmix64).  All randomized code in
// this repository draws from this generator so that corpora are reproducible
// across platforms and languages from (family, n, seed) alone.  The exact
// update and the bounded-draw formula are documented in docs/prng.md; tests
// pin known output values.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound) via the multiply-shift reduction
    // (next() * bound) >> 64.  bound must be nonzero.
    uint64_t below(uint64_t bound) {
        return static_cast<uint64_t>(
            (static_cast<__uint128_t>(next()) * bound) >> 64);
    }

    // Bernoulli draw with probability p in [0,1]; consumes exactly one draw.
    bool chance(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    uint64_t state_;
};

} // namespace splp

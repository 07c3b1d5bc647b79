#pragma once

// Deterministic sampling helpers shared by the test suites.

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>

#include "fdpi/divisibility.hpp"
#include "fdpi/fields.hpp"

namespace fdpi::testing {

/// A valid biquadratic field with |a|, |b| <= bound, by rejection sampling.
inline BiquadraticField random_field(std::mt19937_64& rng, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    for (;;) {
        try {
            return BiquadraticField(dist(rng), dist(rng));
        } catch (const InvalidInput&) {
            // squares / zeros / coinciding fields: draw again
        }
    }
}

/// Coprime (n, m) with m != 0 and magnitudes <= bound.
inline std::pair<std::int64_t, std::int64_t>
random_coprime_nm(std::mt19937_64& rng, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    for (;;) {
        std::int64_t n = dist(rng);
        std::int64_t m = dist(rng);
        if (m == 0) continue;
        if (std::gcd(n, m) != 1) continue;
        return {n, m};
    }
}

} // namespace fdpi::testing

#pragma once

#include <cstdint>
#include <vector>

namespace fdpi {

/// Segmented sieve of Eratosthenes. Base primes up to sqrt(limit) are
/// computed once; any window [lo, hi] within the limit can then be sieved
/// independently, so windows can be processed concurrently.
class SegmentedSieve {
public:
    explicit SegmentedSieve(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    /// Primes in [lo, hi] (hi clamped to the limit), ascending.
    /// Thread-safe: const and touches only the shared base primes.
    std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> base_;
};

/// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

} // namespace fdpi

#include "fdpi/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace fdpi {

namespace {

std::vector<std::uint32_t> simple_sieve(std::uint32_t n) {
    std::vector<std::uint32_t> primes;
    if (n < 2) return primes;
    std::vector<char> composite(n + 1, 0);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = std::uint64_t{i} * i; j <= n; j += i)
            composite[j] = 1;
    }
    return primes;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

} // namespace

SegmentedSieve::SegmentedSieve(std::uint64_t limit)
    : limit_(limit),
      base_(simple_sieve(static_cast<std::uint32_t>(isqrt_u64(limit)))) {}

std::vector<std::uint64_t> SegmentedSieve::primes_in(std::uint64_t lo,
                                                     std::uint64_t hi) const {
    std::vector<std::uint64_t> primes;
    hi = std::min(hi, limit_);
    lo = std::max<std::uint64_t>(lo, 2);
    if (lo > hi) return primes;

    std::vector<char> composite(hi - lo + 1, 0);
    for (std::uint32_t q : base_) {
        const std::uint64_t q2 = std::uint64_t{q} * q;
        if (q2 > hi) break;
        std::uint64_t start = std::max(q2, (lo + q - 1) / q * q);
        for (std::uint64_t j = start; j <= hi; j += q) composite[j - lo] = 1;
    }
    for (std::uint64_t v = lo; v <= hi; ++v)
        if (!composite[v - lo]) primes.push_back(v);
    return primes;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
    if (limit < 2) return {};
    return SegmentedSieve(limit).primes_in(2, limit);
}

} // namespace fdpi

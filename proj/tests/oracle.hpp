#pragma once

// Brute-force reference implementations for the test suites. Everything here
// recomputes results from first definitions (direct enumeration, term-by-term
// basis multiplication, trial division) and deliberately avoids the library's
// root finders, inverse/sqrt routines, and generator formulas, so agreement
// between the two is meaningful evidence.

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fdpi/divisibility.hpp"
#include "fdpi/fields.hpp"

namespace fdpi::oracle {

/// Trial division. Exact for any n < 2^63.
bool is_prime_trial_division(std::uint64_t n);

/// {r in [0,p) : f(r) = 0 mod p} by evaluating f at every residue.
/// coeffs are ascending-degree. Requires p <= 10^6.
std::vector<std::uint64_t> brute_roots(std::span<const int128> coeffs,
                                       std::uint64_t p);

/// Product of u and v as elements c0 + c1*alpha + c2*beta + c3*alpha*beta,
/// reduced by alpha^2 = a and beta^2 = b. Inputs are capped at 2^31 in
/// magnitude so all terms fit comfortably in 128 bits.
std::array<int128, 4> mul_basis(const std::array<std::int64_t, 4>& u,
                                const std::array<std::int64_t, 4>& v,
                                std::int64_t a, std::int64_t b);

/// All ordered pairs ((r,p),(s,p)) with r^2 = a, s^2 = b, r + s = t mod p
/// (found by exhaustive scan) whose components divide the intersections of
/// <n + m*gamma> with the quadratic subrings; the intersection generators
/// are recomputed here from the basis product. Requires p <= 10^4.
std::vector<std::pair<FdpIdeal, FdpIdeal>>
brute_divisor_pairs(const PrincipalIdealSpec& ideal, const FdpIdeal& tc);

} // namespace fdpi::oracle

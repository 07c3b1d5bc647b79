#pragma once

#include <cstdint>
#include <vector>

#include "fdpi/errors.hpp"

namespace fdpi {

// All products and reductions go through 128-bit intermediates so results
// are exact for every modulus below 2^63. Residues are kept in canonical
// form [0, p); signed inputs are reduced on entry.

using int128 = __int128;
using uint128 = unsigned __int128;

/// Canonical representative of x mod p, for p in [2, 2^63).
std::uint64_t mod_reduce(std::int64_t x, std::uint64_t p);
std::uint64_t mod_reduce(int128 x, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Deterministic primality test for n in [1, 2^63): trial division by the
/// first few primes, then Miller-Rabin with a fixed witness set that is
/// exhaustive for 64-bit inputs. No probabilistic failure mode.
/// Throws InvalidInput for n = 0 or n >= 2^63.
bool is_prime(std::uint64_t n);

/// Throws NonPrimeModulus unless p passes is_prime.
void require_prime(std::uint64_t p);

/// Modular inverse of x mod the prime p, via Fermat's little theorem.
/// Throws PreconditionFailure when x is 0 mod p.
std::uint64_t inv_mod(std::int64_t x, std::uint64_t p);

/// The solutions of x^2 = n (mod p) as a sorted set: empty when n is a
/// non-residue, {0} when n = 0, {x, p-x} otherwise (a single root when
/// p = 2). Exhaustive search for p <= 64, Tonelli-Shanks above.
std::vector<std::uint64_t> sqrt_mod(std::int64_t n, std::uint64_t p);

/// Evaluation of x^4 - 2(a+b)x^2 + (a-b)^2 at t, mod p.
std::uint64_t quartic_eval(std::int64_t a, std::int64_t b, std::uint64_t t,
                           std::uint64_t p);

/// The sorted set {t in [0,p) : t^4 - 2(a+b)t^2 + (a-b)^2 = 0 mod p}.
/// For odd p the quartic is solved in two square-root stages:
/// y = (a+b) +- sqrt(4ab), then t = +- sqrt(y); for p = 2 both residues
/// are tested directly. Duplicate roots are merged.
std::vector<std::uint64_t> quartic_roots(std::int64_t a, std::int64_t b,
                                         std::uint64_t p);

} // namespace fdpi

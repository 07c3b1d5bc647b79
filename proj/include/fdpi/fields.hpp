#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "fdpi/modular.hpp"

namespace fdpi {

bool is_perfect_square(std::int64_t x);

/// The ring Z[alpha] with alpha^2 = a, generated by x^2 - a.
/// Valid when a is nonzero, not a perfect square, and |a| <= 2^31 (the
/// magnitude bound keeps every derived product within 128 bits).
class QuadraticField {
public:
    explicit QuadraticField(std::int64_t a);
    std::int64_t a() const { return a_; }

private:
    std::int64_t a_;
};

/// The ring Z[gamma] with gamma = alpha + beta, the compositum of Z[alpha]
/// (alpha^2 = a) and Z[beta] (beta^2 = b). Its minimal polynomial is
/// x^4 - 2(a+b)x^2 + (a-b)^2; requiring a*b to be a non-square makes the
/// two quadratic fields distinct, so the compositum has degree 4.
class BiquadraticField {
public:
    BiquadraticField(std::int64_t a, std::int64_t b);

    std::int64_t a() const { return alpha_.a(); }
    std::int64_t b() const { return beta_.a(); }
    const QuadraticField& alpha_field() const { return alpha_; }
    const QuadraticField& beta_field() const { return beta_; }

    /// Coefficient of x^2 in the minimal polynomial: -2(a+b).
    std::int64_t fc_x2_coeff() const { return fc_x2_; }
    /// Constant coefficient: (a-b)^2. May exceed 64 bits at the magnitude
    /// bound, hence the wide type.
    int128 fc_const_coeff() const { return fc_const_; }

private:
    QuadraticField alpha_;
    QuadraticField beta_;
    std::int64_t fc_x2_;
    int128 fc_const_;
};

/// A first-degree prime ideal, identified with the pair (r, p): the kernel
/// of the evaluation map sending the ring generator to r mod p. Its norm is
/// the prime p. Ordered by (p, r) so enumerations are deterministic.
struct FdpIdeal {
    std::uint64_t r = 0;
    std::uint64_t p = 2;

    friend bool operator==(const FdpIdeal&, const FdpIdeal&) = default;
    friend std::strong_ordering operator<=>(const FdpIdeal& x,
                                            const FdpIdeal& y) {
        if (auto c = x.p <=> y.p; c != 0) return c;
        return x.r <=> y.r;
    }
};

/// True iff (r,p) is a first-degree prime ideal of the given ring: p prime,
/// r canonical, and f(r) = 0 mod p for the ring's minimal polynomial.
bool is_valid_quadratic_ideal(const QuadraticField& field, const FdpIdeal& ideal);
bool is_valid_biquadratic_ideal(const BiquadraticField& field, const FdpIdeal& ideal);

/// All first-degree prime ideals of norm p, sorted by root.
/// Throws NonPrimeModulus when p is not prime.
std::vector<FdpIdeal> fdpi_quadratic(const QuadraticField& field, std::uint64_t p);
std::vector<FdpIdeal> fdpi_biquadratic(const BiquadraticField& field, std::uint64_t p);

/// The evaluation map at the ideal (r,p): c0 + c1*theta |-> c0 + c1*r mod p.
/// The element lies in the ideal iff the result is 0. Coefficients are
/// 128-bit because intersection generators can exceed 64 bits.
std::uint64_t eval_map(int128 c0, int128 c1, const FdpIdeal& ideal);

} // namespace fdpi

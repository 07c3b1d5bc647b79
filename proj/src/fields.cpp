#include "fdpi/fields.hpp"

#include <cmath>
#include <cstdlib>

namespace fdpi {

namespace {

constexpr std::int64_t kMagnitudeCap = std::int64_t{1} << 31;
constexpr std::uint64_t kModulusCap = std::uint64_t{1} << 63;

// Sanity shared by the validity predicates: canonical root, usable modulus.
bool plausible(const FdpIdeal& ideal) {
    return ideal.p >= 2 && ideal.p < kModulusCap && ideal.r < ideal.p &&
           is_prime(ideal.p);
}

} // namespace

bool is_perfect_square(std::int64_t x) {
    if (x < 0) return false;
    auto s = static_cast<std::uint64_t>(
        std::sqrt(static_cast<double>(x)));
    // One ulp of slack either way from the floating sqrt.
    for (std::uint64_t c = s > 1 ? s - 1 : 0; c <= s + 1; ++c)
        if (static_cast<std::int64_t>(c * c) == x) return true;
    return false;
}

QuadraticField::QuadraticField(std::int64_t a) : a_(a) {
    if (a == 0)
        throw InvalidInput("quadratic field: a must be nonzero");
    if (std::llabs(a) > kMagnitudeCap)
        throw InvalidInput("quadratic field: |a| must be at most 2^31");
    if (is_perfect_square(a))
        throw InvalidInput("quadratic field: a must not be a perfect square");
}

BiquadraticField::BiquadraticField(std::int64_t a, std::int64_t b)
    : alpha_(a), beta_(b),
      fc_x2_(-2 * (a + b)),
      fc_const_(int128{a - b} * (a - b)) {
    if (is_perfect_square(a * b))
        throw InvalidInput(
            "biquadratic field: a*b must not be a perfect square "
            "(the two quadratic fields coincide)");
}

bool is_valid_quadratic_ideal(const QuadraticField& field, const FdpIdeal& ideal) {
    return plausible(ideal) &&
           mul_mod(ideal.r, ideal.r, ideal.p) == mod_reduce(field.a(), ideal.p);
}

bool is_valid_biquadratic_ideal(const BiquadraticField& field, const FdpIdeal& ideal) {
    return plausible(ideal) &&
           quartic_eval(field.a(), field.b(), ideal.r, ideal.p) == 0;
}

std::vector<FdpIdeal> fdpi_quadratic(const QuadraticField& field, std::uint64_t p) {
    require_prime(p);
    std::vector<FdpIdeal> ideals;
    for (std::uint64_t r : sqrt_mod(field.a(), p)) ideals.push_back({r, p});
    return ideals;
}

std::vector<FdpIdeal> fdpi_biquadratic(const BiquadraticField& field, std::uint64_t p) {
    require_prime(p);
    std::vector<FdpIdeal> ideals;
    for (std::uint64_t t : quartic_roots(field.a(), field.b(), p))
        ideals.push_back({t, p});
    return ideals;
}

std::uint64_t eval_map(int128 c0, int128 c1, const FdpIdeal& ideal) {
    if (ideal.p < 2 || ideal.p >= kModulusCap || ideal.r >= ideal.p)
        throw PreconditionFailure("eval_map: malformed ideal pair");
    std::uint64_t v0 = mod_reduce(c0, ideal.p);
    std::uint64_t v1 = mod_reduce(c1, ideal.p);
    return (v0 + mul_mod(v1, ideal.r, ideal.p)) % ideal.p;
}

} // namespace fdpi

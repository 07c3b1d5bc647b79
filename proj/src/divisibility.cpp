#include "fdpi/divisibility.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace fdpi {

namespace {

constexpr std::int64_t kMagnitudeCap = std::int64_t{1} << 31;

} // namespace

PrincipalIdealSpec::PrincipalIdealSpec(BiquadraticField field, std::int64_t n,
                                       std::int64_t m)
    : field_(field), n_(n), m_(m) {
    if (std::llabs(n) > kMagnitudeCap || std::llabs(m) > kMagnitudeCap)
        throw InvalidInput("principal ideal: |n| and |m| must be at most 2^31");
    if (m == 0) {
        if (n == 0) throw InvalidInput("principal ideal: <0> is not allowed");
    } else if (std::gcd(n, m) != 1) {
        throw InvalidInput("principal ideal: n and m must be coprime");
    }
}

QuadraticPrincipalIdeal intersect(const PrincipalIdealSpec& ideal, Side side) {
    const int128 n = ideal.n();
    const int128 m = ideal.m();
    if (m == 0) return {n, 0, side};
    const int128 diff = side == Side::Alpha ? ideal.field().a() - ideal.field().b()
                                            : ideal.field().b() - ideal.field().a();
    return {n * n + m * m * diff, 2 * n * m, side};
}

bool divides_biquad(const PrincipalIdealSpec& ideal, const FdpIdeal& tc) {
    if (!is_valid_biquadratic_ideal(ideal.field(), tc))
        throw PreconditionFailure(
            "divides: (t,p) is not a first-degree prime ideal of Z[gamma]");
    return mod_reduce(int128{ideal.n()} + int128{ideal.m()} * tc.r, tc.p) == 0;
}

bool divides_quad(const QuadraticPrincipalIdeal& gen, const FdpIdeal& divisor) {
    return eval_map(gen.c0, gen.c1, divisor) == 0;
}

CombineDivisorOutcome combine_divisors(const PrincipalIdealSpec& ideal,
                                       const FdpIdeal& ra, const FdpIdeal& sb) {
    if (ra.p != sb.p)
        throw PreconditionFailure("combine_divisors: ideals have different norms");
    if (!is_valid_quadratic_ideal(ideal.field().alpha_field(), ra))
        throw PreconditionFailure(
            "combine_divisors: (r,p) is not a first-degree prime ideal of Z[alpha]");
    if (!is_valid_quadratic_ideal(ideal.field().beta_field(), sb))
        throw PreconditionFailure(
            "combine_divisors: (s,p) is not a first-degree prime ideal of Z[beta]");
    if (!divides_quad(intersect(ideal, Side::Alpha), ra))
        throw PreconditionFailure(
            "combine_divisors: (r,p) does not divide the Z[alpha] intersection");
    if (!divides_quad(intersect(ideal, Side::Beta), sb))
        throw PreconditionFailure(
            "combine_divisors: (s,p) does not divide the Z[beta] intersection");

    CombineDivisorOutcome out;
    out.ideal = combine(ideal.field(), ra, sb);
    out.divides = divides_biquad(ideal, out.ideal);
    out.exceptional = ra.p != 2 && mod_reduce(ideal.n(), ra.p) == 0 &&
                      out.ideal.r != 0;
    return out;
}

std::vector<std::pair<FdpIdeal, FdpIdeal>>
decompose_divisor(const PrincipalIdealSpec& ideal, const FdpIdeal& tc) {
    if (!divides_biquad(ideal, tc))
        throw PreconditionFailure(
            "decompose_divisor: (t,p) does not divide <n + m*gamma>");

    const DecomposeOutcome outcome = decompose(ideal.field(), tc);
    std::vector<std::pair<FdpIdeal, FdpIdeal>> pairs;
    if (outcome.kind == DecomposeKind::Unique)
        pairs.push_back(*outcome.pair);
    else
        pairs = outcome.zero_info->pairs;

    // Guaranteed for every source pair of a dividing ideal; a failure here
    // means the arithmetic above is broken, not that the input was bad.
    const QuadraticPrincipalIdeal ga = intersect(ideal, Side::Alpha);
    const QuadraticPrincipalIdeal gb = intersect(ideal, Side::Beta);
    for (const auto& [ra, sb] : pairs)
        if (!divides_quad(ga, ra) || !divides_quad(gb, sb))
            throw std::logic_error(
                "decompose_divisor: source pair does not divide the intersections");
    return pairs;
}

} // namespace fdpi

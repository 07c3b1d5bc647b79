#include "fdpi/combination.hpp"

#include <stdexcept>

namespace fdpi {

namespace {

void require_quadratic_ideal(const QuadraticField& field, const FdpIdeal& ideal,
                             const char* which) {
    if (!is_valid_quadratic_ideal(field, ideal))
        throw PreconditionFailure(std::string("(") + std::to_string(ideal.r) +
                                  "," + std::to_string(ideal.p) +
                                  ") is not a first-degree prime ideal of " +
                                  which);
}

} // namespace

FdpIdeal combine(const BiquadraticField& field, const FdpIdeal& ra,
                 const FdpIdeal& sb) {
    if (ra.p != sb.p)
        throw PreconditionFailure("combine: ideals have different norms");
    require_quadratic_ideal(field.alpha_field(), ra, "Z[alpha]");
    require_quadratic_ideal(field.beta_field(), sb, "Z[beta]");
    return {(ra.r + sb.r) % ra.p, ra.p};
}

DecomposeOutcome decompose(const BiquadraticField& field, const FdpIdeal& tc) {
    if (!is_valid_biquadratic_ideal(field, tc))
        throw PreconditionFailure(
            "decompose: (t,p) is not a first-degree prime ideal of Z[gamma]");

    const std::uint64_t p = tc.p;
    DecomposeOutcome out;

    if (p == 2) {
        // Squaring is the identity mod 2, so the source roots are forced.
        out.kind = DecomposeKind::Unique;
        out.pair = {{mod_reduce(field.a(), 2), 2}, {mod_reduce(field.b(), 2), 2}};
        return out;
    }

    if (tc.r != 0) {
        const std::uint64_t t = tc.r;
        const std::uint64_t inv2t = inv_mod(static_cast<std::int64_t>((2 * t) % p), p);
        const std::uint64_t t2 = mul_mod(t, t, p);
        const std::uint64_t diff = mod_reduce(field.a() - field.b(), p);
        const std::uint64_t r = mul_mod((t2 + diff) % p, inv2t, p);
        const std::uint64_t s = mul_mod((t2 + p - diff) % p, inv2t, p);

        // The closed formulas already land on roots of both quadratics; the
        // degenerate sign choices of the derivation collapse onto this pair.
        if (mul_mod(r, r, p) != mod_reduce(field.a(), p) ||
            mul_mod(s, s, p) != mod_reduce(field.b(), p) || (r + s) % p != t)
            throw std::logic_error("decompose: source pair failed its congruences");

        out.kind = DecomposeKind::Unique;
        out.pair = {{r, p}, {s, p}};
        return out;
    }

    out.kind = DecomposeKind::ZeroCase;
    out.zero_info = classify_zero(field, p);
    return out;
}

ZeroClassification classify_zero(const BiquadraticField& field, std::uint64_t p) {
    if (p == 2)
        throw PreconditionFailure(
            "classify_zero: p = 2 has a unique source pair; use decompose");
    require_prime(p);
    if (mod_reduce(field.a() - field.b(), p) != 0)
        throw PreconditionFailure(
            "classify_zero: (0,p) is not an ideal of Z[gamma] (a != b mod p)");

    ZeroClassification out;
    std::vector<std::uint64_t> roots = sqrt_mod(field.a(), p);
    out.nu = static_cast<int>(roots.size());

    if (out.nu == 1) {
        // A single root forces a = 0 mod p, so the pair is ((0,p),(0,p)).
        out.pairs.push_back({{roots[0], p}, {roots[0], p}});
    } else if (out.nu == 2) {
        const std::uint64_t r = roots[0];
        out.pairs.push_back({{r, p}, {p - r, p}});
        out.pairs.push_back({{p - r, p}, {r, p}});
    }
    return out;
}

} // namespace fdpi

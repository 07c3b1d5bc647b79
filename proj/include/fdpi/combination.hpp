#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fdpi/fields.hpp"

namespace fdpi {

/// How the ideal (0,p), p odd, relates to the quadratic ideals below it.
/// nu is the number of roots of x^2 - a mod p; since (0,p) being an ideal
/// forces a = b mod p, the same count holds for x^2 - b.
///   nu = 0: (0,p) is not a combination of any quadratic pair.
///   nu = 1: exactly one source pair, ((0,p), (0,p)).
///   nu = 2: two source pairs, ((r,p), (-r,p)) and ((-r,p), (r,p)).
struct ZeroClassification {
    int nu = 0;
    /// (alpha-side ideal, beta-side ideal) pairs combining to (0,p),
    /// in deterministic order (smaller alpha root first).
    std::vector<std::pair<FdpIdeal, FdpIdeal>> pairs;
};

enum class DecomposeKind { Unique, ZeroCase };

struct DecomposeOutcome {
    DecomposeKind kind = DecomposeKind::Unique;
    /// Present iff kind == Unique; (alpha-side, beta-side), r + s = t mod p.
    std::optional<std::pair<FdpIdeal, FdpIdeal>> pair;
    /// Present iff kind == ZeroCase (t = 0 and p odd).
    std::optional<ZeroClassification> zero_info;
};

/// Combination: given ideals (r,p) of Z[alpha] and (s,p) of Z[beta],
/// (r+s, p) is a first-degree prime ideal of Z[gamma].
/// Throws PreconditionFailure on mismatched norms or invalid input ideals.
FdpIdeal combine(const BiquadraticField& field, const FdpIdeal& ra,
                 const FdpIdeal& sb);

/// Inverse direction. For p = 2 the unique source pair is (a, b) mod 2;
/// for odd p and t != 0 it is r = (t^2+a-b)/2t, s = (t^2-a+b)/2t, which the
/// implementation re-checks against both quadratic congruences. For t = 0
/// and p odd the outcome carries the ZeroClassification instead.
DecomposeOutcome decompose(const BiquadraticField& field, const FdpIdeal& tc);

/// Classification of (0,p) for odd p. Requires (0,p) to be an ideal of
/// Z[gamma], i.e. a = b mod p; throws PreconditionFailure otherwise, and
/// directs p = 2 to decompose (where (0,2) has a unique source pair).
ZeroClassification classify_zero(const BiquadraticField& field, std::uint64_t p);

} // namespace fdpi

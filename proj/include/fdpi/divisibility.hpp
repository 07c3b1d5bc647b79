#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fdpi/combination.hpp"
#include "fdpi/fields.hpp"

namespace fdpi {

enum class Side { Alpha, Beta };

/// The principal ideal <n + m*gamma> of Z[gamma]. Requires coprime (n, m)
/// when m != 0; m = 0 stands for the integer ideal <n> and only needs
/// n != 0. Magnitudes are capped at 2^31 so generator coefficients fit in
/// 128 bits.
class PrincipalIdealSpec {
public:
    PrincipalIdealSpec(BiquadraticField field, std::int64_t n, std::int64_t m);

    const BiquadraticField& field() const { return field_; }
    std::int64_t n() const { return n_; }
    std::int64_t m() const { return m_; }

private:
    BiquadraticField field_;
    std::int64_t n_;
    std::int64_t m_;
};

/// Generator of the intersection of <n + m*gamma> with a quadratic subring,
/// as c0 + c1*alpha (side Alpha) or c0 + c1*beta (side Beta).
struct QuadraticPrincipalIdeal {
    int128 c0 = 0;
    int128 c1 = 0;
    Side side = Side::Alpha;
};

/// I cap Z[alpha] = <n^2 + m^2(a-b) + 2nm*alpha>, and symmetrically with
/// b-a on the beta side. For m = 0 both intersections are <n>.
QuadraticPrincipalIdeal intersect(const PrincipalIdealSpec& ideal, Side side);

/// Whether the first-degree prime ideal (t,p) divides <n + m*gamma>,
/// i.e. whether n + m*t = 0 mod p (containment in the kernel of the
/// evaluation map). Throws PreconditionFailure when (t,p) is not an ideal
/// of Z[gamma].
bool divides_biquad(const PrincipalIdealSpec& ideal, const FdpIdeal& tc);

/// Kernel-membership test c0 + c1*r = 0 mod p. The divisor is expected to
/// be an ideal of the subring named by gen.side; that is the caller's
/// contract and is not re-derivable from the bare (r,p) pair.
bool divides_quad(const QuadraticPrincipalIdeal& gen, const FdpIdeal& divisor);

struct CombineDivisorOutcome {
    FdpIdeal ideal;     ///< (r+s, p)
    bool divides = false;
    /// The one configuration where combining divisors can lose divisibility:
    /// p != 2, n = 0 mod p, and r + s != 0 mod p. Whenever exceptional is
    /// false, divides is guaranteed true.
    bool exceptional = false;
};

/// Combines a divisor of I cap Z[alpha] with a divisor of I cap Z[beta] and
/// reports whether the combined ideal divides I. Checks the divisor
/// preconditions (valid ideals, equal norms, both dividing their
/// intersections) and throws PreconditionFailure when they fail.
CombineDivisorOutcome combine_divisors(const PrincipalIdealSpec& ideal,
                                       const FdpIdeal& ra, const FdpIdeal& sb);

/// Source pairs of a biquadratic divisor (t,p) of I, each of which divides
/// the matching intersections: the unique pair when p = 2 or t != 0, the
/// ZeroClassification pairs when t = 0 (empty for nu = 0, two ordered pairs
/// for nu = 2). Throws PreconditionFailure when (t,p) does not divide I.
std::vector<std::pair<FdpIdeal, FdpIdeal>>
decompose_divisor(const PrincipalIdealSpec& ideal, const FdpIdeal& tc);

} // namespace fdpi

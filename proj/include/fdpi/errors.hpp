#pragma once

#include <stdexcept>

namespace fdpi {

/// Malformed parameters: zero or square field constants, out-of-range
/// magnitudes, non-coprime (n, m). Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A modulus that fails the primality test where a prime is required.
/// Maps to CLI exit code 3.
class NonPrimeModulus : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A violated mathematical precondition: a pair (r,p) that is not an ideal
/// of the relevant ring, mismatched ideal norms, or a divisor argument that
/// does not divide. Maps to CLI exit code 4.
class PreconditionFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace fdpi

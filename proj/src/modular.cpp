#include "fdpi/modular.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace fdpi {

namespace {

constexpr std::uint64_t kModulusCap = std::uint64_t{1} << 63;

// First 12 primes: a Miller-Rabin witness set with no strong pseudoprime
// below 3.3e24, so the test is exact over the full 64-bit range.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t odd,
                          int twos) {
    std::uint64_t x = pow_mod(a, odd, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < twos; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Tonelli-Shanks for odd prime p, n a nonzero quadratic residue mod p.
std::uint64_t tonelli_shanks(std::uint64_t n, std::uint64_t p) {
    if (p % 4 == 3) return pow_mod(n, (p + 1) / 4, p);

    std::uint64_t q = p - 1;
    int s = std::countr_zero(q);
    q >>= s;

    // Smallest quadratic non-residue; guaranteed to exist for odd p.
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) == 1) ++z;

    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t x = pow_mod(n, (q + 1) / 2, p);
    std::uint64_t t = pow_mod(n, q, p);
    int m = s;

    while (t != 1) {
        std::uint64_t t2 = t;
        int i = 0;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
        }
        std::uint64_t b = c;
        for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        x = mul_mod(x, b, p);
    }
    return x;
}

} // namespace

std::uint64_t mod_reduce(std::int64_t x, std::uint64_t p) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_reduce(int128 x, std::uint64_t p) {
    int128 r = x % static_cast<int128>(p);
    if (r < 0) r += static_cast<int128>(p);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<uint128>(x) * y % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n == 0 || n >= kModulusCap)
        throw InvalidInput("is_prime: argument must be in [1, 2^63)");
    if (n < 2) return false;
    for (std::uint64_t q : kWitnesses) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Here n > 37^2 or prime; every composite below 37^2 has a factor above.
    std::uint64_t odd = n - 1;
    int twos = std::countr_zero(odd);
    odd >>= twos;
    for (std::uint64_t a : kWitnesses)
        if (!miller_rabin_witness(n, a, odd, twos)) return false;
    return true;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw NonPrimeModulus("modulus is not prime");
}

std::uint64_t inv_mod(std::int64_t x, std::uint64_t p) {
    std::uint64_t v = mod_reduce(x, p);
    if (v == 0) throw PreconditionFailure("inv_mod: value is 0 mod p, not invertible");
    return pow_mod(v, p - 2, p);
}

std::vector<std::uint64_t> sqrt_mod(std::int64_t n, std::uint64_t p) {
    require_prime(p);
    std::uint64_t v = mod_reduce(n, p);

    // For tiny moduli the setup of Tonelli-Shanks costs more than scanning.
    if (p <= 64) {
        std::vector<std::uint64_t> roots;
        for (std::uint64_t r = 0; r < p; ++r)
            if (mul_mod(r, r, p) == v) roots.push_back(r);
        return roots;
    }

    if (v == 0) return {0};
    if (pow_mod(v, (p - 1) / 2, p) != 1) return {};

    std::uint64_t x = tonelli_shanks(v, p);
    std::uint64_t y = p - x; // distinct from x: v != 0 and p is odd
    return {std::min(x, y), std::max(x, y)};
}

std::uint64_t quartic_eval(std::int64_t a, std::int64_t b, std::uint64_t t,
                           std::uint64_t p) {
    std::uint64_t t2 = mul_mod(t % p, t % p, p);
    std::uint64_t t4 = mul_mod(t2, t2, p);
    std::uint64_t c2 = mod_reduce(int128{2} * (a + b), p);
    std::uint64_t c0 = mod_reduce(int128{a - b} * (a - b), p);
    std::uint64_t v = (t4 + p - mul_mod(c2, t2, p)) % p;
    return (v + c0) % p;
}

std::vector<std::uint64_t> quartic_roots(std::int64_t a, std::int64_t b,
                                         std::uint64_t p) {
    require_prime(p);

    if (p == 2) {
        std::vector<std::uint64_t> roots;
        for (std::uint64_t t = 0; t < 2; ++t)
            if (quartic_eval(a, b, t, p) == 0) roots.push_back(t);
        return roots;
    }

    // Substituting y = t^2 gives y^2 - 2(a+b)y + (a-b)^2, whose roots are
    // y = (a+b) +- sqrt(4ab).
    std::uint64_t ra = mod_reduce(a, p);
    std::uint64_t rb = mod_reduce(b, p);
    std::uint64_t disc = mul_mod(4 % p, mul_mod(ra, rb, p), p);
    std::uint64_t sum = (ra + rb) % p;

    std::vector<std::uint64_t> roots;
    for (std::uint64_t w : sqrt_mod(static_cast<std::int64_t>(disc), p)) {
        std::uint64_t y = (sum + w) % p;
        for (std::uint64_t t : sqrt_mod(static_cast<std::int64_t>(y), p))
            roots.push_back(t);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace fdpi

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fdpi/modular.hpp"
#include "fdpi/sieve.hpp"
#include "oracle.hpp"

using namespace fdpi;

TEST_CASE("mod_reduce canonicalizes negatives") {
    CHECK(mod_reduce(std::int64_t{-105}, 7) == 0);
    CHECK(mod_reduce(std::int64_t{-1}, 97) == 96);
    CHECK(mod_reduce(std::int64_t{-4}, 5) == 1);
    CHECK(mod_reduce(int128{1} << 90, 97) == pow_mod(2, 90, 97));
    CHECK(mod_reduce(-(int128{1} << 90), 97) == 97 - pow_mod(2, 90, 97));
}

TEST_CASE("is_prime: examples") {
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    // Strong pseudoprime to bases 2, 3, 5, 7; composite as 151*751*28351.
    CHECK(std::uint64_t{151} * 751 * 28351 == 3215031751ULL);
    CHECK(oracle::is_prime_trial_division(3215031751ULL) == false);
    CHECK_FALSE(is_prime(3215031751ULL));
}

TEST_CASE("is_prime: known Miller-Rabin traps stay composite") {
    // Each is a strong pseudoprime to every base below its listed factor set.
    CHECK_FALSE(is_prime(25326001ULL));          // spsp(2,3,5)
    CHECK_FALSE(is_prime(3215031751ULL));        // spsp(2,3,5,7)
    CHECK_FALSE(is_prime(2152302898747ULL));     // spsp(2..11)
    CHECK_FALSE(is_prime(3474749660383ULL));     // spsp(2..13)
    CHECK_FALSE(is_prime(341550071728321ULL));   // spsp(2..17)
    CHECK(is_prime((std::uint64_t{1} << 61) - 1)); // Mersenne prime
}

TEST_CASE("is_prime: range errors") {
    CHECK_THROWS_AS(is_prime(0), InvalidInput);
    CHECK_THROWS_AS(is_prime(std::uint64_t{1} << 63), InvalidInput);
    CHECK_THROWS_AS(is_prime(~std::uint64_t{0}), InvalidInput);
    CHECK_NOTHROW(is_prime((std::uint64_t{1} << 63) - 1));
}

TEST_CASE("is_prime agrees with trial division below 10^6") {
    for (std::uint64_t n = 1; n < 1000000; ++n)
        REQUIRE(is_prime(n) == oracle::is_prime_trial_division(n));
}

TEST_CASE("inv_mod: examples and errors") {
    CHECK(inv_mod(4, 7) == 2);
    CHECK(inv_mod(2, 97) == 49);
    CHECK(inv_mod(1, 2) == 1);
    CHECK_THROWS_AS(inv_mod(0, 7), PreconditionFailure);
    CHECK_THROWS_AS(inv_mod(14, 7), PreconditionFailure);
}

TEST_CASE("inv_mod: x * inv(x) = 1 on random inputs") {
    std::mt19937_64 rng(0x1d5a11);
    const std::vector<std::uint64_t> primes = {2,  3,  5,  97, 101, 65537,
                                               1000003, 2147483647ULL,
                                               (std::uint64_t{1} << 61) - 1};
    std::uniform_int_distribution<std::int64_t> dist(
        std::numeric_limits<std::int64_t>::min(),
        std::numeric_limits<std::int64_t>::max());
    int checked = 0;
    while (checked < 10000) {
        std::uint64_t p = primes[rng() % primes.size()];
        std::int64_t x = dist(rng);
        if (mod_reduce(x, p) == 0) continue;
        std::uint64_t y = inv_mod(x, p);
        CHECK(mul_mod(mod_reduce(x, p), y, p) == 1);
        ++checked;
    }
}

TEST_CASE("sqrt_mod: examples") {
    CHECK(sqrt_mod(50, 7) == std::vector<std::uint64_t>{1, 6});
    CHECK(sqrt_mod(2, 3).empty());
    CHECK(sqrt_mod(9, 97) == std::vector<std::uint64_t>{3, 94});
    CHECK(sqrt_mod(0, 13) == std::vector<std::uint64_t>{0});
    CHECK(sqrt_mod(0, 2) == std::vector<std::uint64_t>{0});
    CHECK(sqrt_mod(5, 2) == std::vector<std::uint64_t>{1});
    CHECK_THROWS_AS(sqrt_mod(5, 15), NonPrimeModulus);
}

TEST_CASE("sqrt_mod: all residue classes against brute enumeration") {
    // Covers the exhaustive branch, p = 3 mod 4, p = 1 mod 4, and the
    // Tonelli-Shanks loop with large two-adic part (97: p-1 = 2^5 * 3).
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 61ULL, 67ULL, 73ULL, 97ULL,
                            101ULL, 113ULL, 409ULL, 577ULL}) {
        for (std::uint64_t n = 0; n < p; ++n) {
            const int128 coeffs[] = {-static_cast<int128>(n), 0, 1};
            auto expected = oracle::brute_roots(coeffs, p);
            auto got = sqrt_mod(static_cast<std::int64_t>(n), p);
            REQUIRE(got == expected);
        }
    }
}

TEST_CASE("sqrt_mod: root pairs square back and sum to zero") {
    std::mt19937_64 rng(0xd1ce);
    auto primes = primes_upto(2000);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t p = primes[rng() % primes.size()];
        auto n = static_cast<std::int64_t>(rng() % (2 * p)) - static_cast<std::int64_t>(p);
        auto roots = sqrt_mod(n, p);
        for (std::uint64_t x : roots) CHECK(mul_mod(x, x, p) == mod_reduce(n, p));
        if (roots.size() == 2) CHECK((roots[0] + roots[1]) % p == 0);
    }
}

TEST_CASE("quartic_roots: examples") {
    CHECK(quartic_roots(50, 155, 7) == std::vector<std::uint64_t>{0, 2, 5});
    CHECK(quartic_roots(-4, 6, 5) == std::vector<std::uint64_t>{0, 2, 3});
    CHECK(quartic_roots(50, 155, 3) == std::vector<std::uint64_t>{0});
    CHECK(quartic_roots(50, 155, 5) == std::vector<std::uint64_t>{0});
    CHECK_THROWS_AS(quartic_roots(50, 155, 6), NonPrimeModulus);
}

TEST_CASE("quartic_roots equals brute enumeration over sampled fields") {
    std::mt19937_64 rng(0x9a7e5);
    auto primes = primes_upto(500);
    for (int i = 0; i < 25; ++i) {
        auto a = static_cast<std::int64_t>(rng() % 20001) - 10000;
        auto b = static_cast<std::int64_t>(rng() % 20001) - 10000;
        for (std::uint64_t p : primes) {
            const int128 coeffs[] = {int128{a - b} * (a - b), 0, -2 * (a + b),
                                     0, 1};
            REQUIRE(quartic_roots(a, b, p) == oracle::brute_roots(coeffs, p));
        }
    }
}

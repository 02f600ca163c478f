#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "esfrac/ntheory.hpp"
#include "oracles.hpp"

using namespace esfrac;
using namespace esfrac::ntheory;

TEST_CASE("sieve_primes small ranges") {
    CHECK(sieve_primes(1, 10).primes == std::vector<u64>{2, 3, 5, 7});
    CHECK(sieve_primes(1, 100).primes.size() == 25);
    CHECK(sieve_primes(0, 1).primes.empty());
    CHECK(sieve_primes(13, 13).primes == std::vector<u64>{13});
    CHECK_THROWS_AS(sieve_primes(10, 5), DomainError);
}

TEST_CASE("sieve_primes (1650, 3299] beats x/(2 log x)") {
    const auto r = sieve_primes(1650, 3299);
    u64 want = 0;
    for (u64 n = 1650; n <= 3299; ++n) want += oracle::is_prime(n);
    CHECK(r.primes.size() == want);
    CHECK(static_cast<double>(r.primes.size()) > 3299.0 / (2.0 * std::log(3299.0)));
}

TEST_CASE("sieve_primes equals trial division up to 1e5, small segments") {
    SieveOptions opt;
    opt.segment_size = 997;  // odd size to exercise segment edges
    const auto r = sieve_primes(1, 100'000, opt);
    std::vector<u64> want;
    for (u64 n = 1; n <= 100'000; ++n) {
        if (oracle::is_prime(n)) want.push_back(n);
    }
    CHECK(r.primes == want);

    std::vector<u64> streamed;
    for_each_prime(40'000, 100'000, [&](u64 p) { streamed.push_back(p); }, 4096);
    std::vector<u64> tail(std::lower_bound(want.begin(), want.end(), 40'000), want.end());
    CHECK(streamed == tail);
    CHECK(count_primes(40'000, 100'000) == tail.size());
}

TEST_CASE("sieve_primes respects the span budget") {
    SieveOptions opt;
    opt.span_budget = 1000;
    CHECK_THROWS_AS(sieve_primes(1, 5000, opt), LimitError);
}

TEST_CASE("is_prime") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(1'000'000'007));
    for (u64 n = 0; n <= 20'000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
    // Carmichael numbers and strong pseudoprimes to small bases
    for (u64 n : {561ull, 1105ull, 1729ull, 2047ull, 3215031751ull, 3825123056546413051ull}) {
        CHECK_FALSE(is_prime(n));
    }
    CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ull));
    CHECK(is_prime(4294967291ull));
    CHECK_FALSE(is_prime(4294967291ull * 4294967279ull));
}

TEST_CASE("factorize reconstructs n") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        const u64 n = rng() >> (rng() % 63);
        if (n == 0) continue;
        const auto f = factorize(n);
        u128 prod = 1;
        u64 prev = 0;
        for (const auto& pp : f) {
            CHECK(pp.prime > prev);
            CHECK(is_prime(pp.prime));
            for (unsigned e = 0; e < pp.exponent; ++e) prod *= pp.prime;
            prev = pp.prime;
        }
        CHECK(prod == n);
    }
    CHECK(factorize(1).empty());
    // semiprime of two 32-bit primes goes through the rho path
    const auto f = factorize(4294967291ull * 4294967279ull);
    REQUIRE(f.size() == 2);
    CHECK(f[0].prime == 4294967279ull);
    CHECK(f[1].prime == 4294967291ull);
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(28) == std::vector<u64>{1, 2, 4, 7, 14, 28});
    for (u64 n = 1; n <= 3000; ++n) CHECK(divisors(n) == oracle::divisors(n));
}

TEST_CASE("divisor_profile") {
    const auto one = divisor_profile(1);
    CHECK(one.tau == 1);
    CHECK(one.tau1 == 1);
    CHECK(one.tau2 == 0);
    CHECK(one.tau3 == 0);
    CHECK(one.tau6 == 0);

    const auto p12 = divisor_profile(12);
    CHECK(p12.tau == 6);
    CHECK(p12.tau1 == 1);
    CHECK(p12.tau2 == 2);
    CHECK(p12.tau3 == 1);
    CHECK(p12.tau6 == 2);

    // gcd classes counted directly
    for (u64 n = 1; n <= 5000; ++n) {
        u64 c[7] = {};
        for (u64 d : oracle::divisors(n)) ++c[std::gcd(d, u64{6})];
        const auto p = divisor_profile(n);
        CHECK(p.tau == oracle::tau(n));
        CHECK(p.tau1 == c[1]);
        CHECK(p.tau2 == c[2]);
        CHECK(p.tau3 == c[3]);
        CHECK(p.tau6 == c[6]);
    }
}

TEST_CASE("tau table agrees with divisor counting up to 1e5") {
    const auto t = divisor_count_table(100'000);
    for (u64 n = 1; n <= 100'000; ++n) {
        REQUIRE(t[n] == divisor_profile(n).tau);
    }
    for (u64 n = 1; n <= 2000; ++n) CHECK(t[n] == oracle::tau(n));
}

TEST_CASE("divisors above sqrt(jn) are at most half of each class, n <= 1e5") {
    for (u64 n = 1; n <= 100'000; ++n) {
        const auto p = divisor_profile(n);
        u64 big[7] = {};
        for (u64 d : divisors(n)) {
            const u64 j = std::gcd(d, u64{6});
            if (static_cast<u128>(d) * d > static_cast<u128>(j) * n) ++big[j];
        }
        REQUIRE(2 * big[1] <= p.tau1);
        REQUIRE(2 * big[2] <= p.tau2);
        REQUIRE(2 * big[3] <= p.tau3);
        REQUIRE(2 * big[6] <= p.tau6);
    }
}

TEST_CASE("structured u: tau(u)/u^(1/6) in (138.30, 138.313)") {
    const std::vector<PrimePower> u{{2, 8},  {3, 4},  {5, 3},  {7, 2},  {11, 2}, {13, 1},
                                    {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}, {37, 1},
                                    {41, 1}, {43, 1}, {47, 1}, {53, 1}, {59, 1}, {61, 1}};
    const double tau = static_cast<double>(divisor_count(u));
    double log_u = 0;
    for (const auto& pp : u) log_u += pp.exponent * std::log(static_cast<double>(pp.prime));
    const double ratio = tau / std::exp(log_u / 6.0);
    CHECK(ratio > 138.30);
    CHECK(ratio < 138.313);
}

TEST_CASE("mobius and euler_phi") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    for (u64 n = 1; n <= 10'000; ++n) {
        int s = 0;
        for (u64 d : divisors(n)) s += mobius(d);
        REQUIRE(s == (n == 1 ? 1 : 0));
    }
    for (u64 a = 1; a <= 100; ++a) {
        for (u64 b = 1; a * b <= 10'000; ++b) {
            if (std::gcd(a, b) != 1) continue;
            REQUIRE(mobius(a * b) == mobius(a) * mobius(b));
            REQUIRE(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
        }
    }
    for (u64 n = 1; n <= 500; ++n) {
        u64 c = 0;
        for (u64 k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
        CHECK(euler_phi(n) == c);
    }
}

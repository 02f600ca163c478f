#pragma once

// Exact integer primitives: primes, factorization, divisors and the divisor
// counting functions tau and tau'_j (divisors d with gcd(d, 6) = j).

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "esfrac/checked.hpp"

namespace esfrac::ntheory {

struct PrimeRange {
    u64 lo = 0;
    u64 hi = 0;
    std::vector<u64> primes;  // every prime in [lo, hi], ascending
};

struct DivisorProfile {
    u128 n = 1;
    u64 tau = 1;
    u64 tau1 = 1;
    u64 tau2 = 0;
    u64 tau3 = 0;
    u64 tau6 = 0;

    friend bool operator==(const DivisorProfile&, const DivisorProfile&) = default;
};

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

struct SieveOptions {
    u64 segment_size = u64{1} << 20;
    // Largest hi - lo accepted by sieve_primes, which materialises the list.
    u64 span_budget = u64{1} << 30;
};

// Segmented sieve of Eratosthenes over [lo, hi]. Throws LimitError when the
// span exceeds options.span_budget; callers with bigger ranges should chunk
// or use for_each_prime.
PrimeRange sieve_primes(u64 lo, u64 hi, const SieveOptions& options = {});

// Streams the primes of [lo, hi] in ascending order, one segment at a time.
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit,
                    u64 segment_size = u64{1} << 20);

// Number of primes p with lo <= p <= hi.
u64 count_primes(u64 lo, u64 hi);

// Deterministic for the whole 64-bit range (Miller-Rabin with a witness set
// proven sufficient below 2^64).
bool is_prime(u64 n);

// Prime factorization, ascending primes. factorize(1) is empty.
Factorization factorize(u64 n);

// All divisors of the number with the given factorization, ascending.
std::vector<u128> expand_divisors(std::span<const PrimePower> factors);

std::vector<u64> divisors(u64 n);

u128 divisor_count(std::span<const PrimePower> factors);

DivisorProfile divisor_profile(u64 n);
DivisorProfile divisor_profile(std::span<const PrimePower> factors);

int mobius(u64 n);

u64 euler_phi(u64 n);

// tau(k) for 0 <= k <= limit (tau(0) reported as 0).
std::vector<std::uint32_t> divisor_count_table(u64 limit);

// Primes below 2^16, shared and immutable.
std::span<const std::uint32_t> small_primes();

}  // namespace esfrac::ntheory

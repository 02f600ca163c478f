#pragma once

// Exception enumeration for fixed m: every n <= N with m/n not a sum of three
// unit fractions, plus prime-interval searches and Type I/II coverage counts.

#include <optional>
#include <vector>

#include "esfrac/checked.hpp"

namespace esfrac::sieve {

inline constexpr u64 kMaxLimit = 1'000'000'000;

struct ScanOptions {
    unsigned threads = 0;          // 0: use worker_count()
    std::size_t chunk_size = 256;  // primes handed to a worker at a time
};

struct ExceptionList {
    u64 m = 0;
    u64 limit = 0;
    std::vector<u64> entries;  // ascending, closed under taking divisors

    u64 count() const { return entries.size(); }
    friend bool operator==(const ExceptionList&, const ExceptionList&) = default;
};

struct CoverageReport {
    u64 m = 0;
    u64 N = 0;
    u64 primes_total = 0;  // primes p in (N/2, N] with p not dividing m
    u64 type1_covered = 0;
    u64 type2_covered = 0;
    u64 uncovered = 0;
    double bound_rhs = 0;  // 698 N^{4/3} / m^{7/6}
    std::vector<u64> uncovered_primes;
};

struct FinalThoughtsRow {
    u64 m = 0;
    bool m_over_m_plus_1_representable = false;
    std::optional<u64> short_interval_prime;
    // The prime lies in (m, (6/5)(m-1)) and was accepted without a search.
    bool by_interval_criterion = false;
};

// m/p as a sum of three unit fractions for prime p not dividing m, m >= 4,
// decided through the Type I / Type II witness searches.
bool prime_representable(u64 m, u64 p);

ExceptionList exceptions_up_to(u64 m, u64 limit, const ScanOptions& options = {});

// Smallest prime p in the open interval (lo, hi), p not dividing m, with m/p
// not a sum of three unit fractions.
std::optional<u64> exceptional_prime_in(u64 m, u64 lo, u64 hi);

CoverageReport coverage_counts(u64 m, u64 N, const ScanOptions& options = {});

std::vector<FinalThoughtsRow> final_thoughts_scan(u64 m_lo, u64 m_hi);

}  // namespace esfrac::sieve

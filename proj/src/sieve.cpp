#include "esfrac/sieve.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "esfrac/decompose.hpp"
#include "esfrac/ntheory.hpp"
#include "esfrac/parallel.hpp"
#include "esfrac/parametric.hpp"

namespace esfrac::sieve {
namespace {

constexpr u64 kPrimeBatch = u64{1} << 18;

unsigned threads_for(const ScanOptions& options) {
    return options.threads == 0 ? worker_count() : options.threads;
}

// Runs fn over the primes of [lo, hi] in ascending batches; fn receives a
// batch and must fill `flags` (one per prime) deterministically.
void for_prime_batches(u64 lo, u64 hi, const std::function<void(const std::vector<u64>&)>& fn) {
    std::vector<u64> batch;
    batch.reserve(4096);
    ntheory::for_each_prime(lo, hi, [&](u64 p) {
        batch.push_back(p);
        if (batch.size() == kPrimeBatch) {
            fn(batch);
            batch.clear();
        }
    });
    if (!batch.empty()) fn(batch);
}

u64 largest_prime_factor(u64 n) { return ntheory::factorize(n).back().prime; }

}  // namespace

bool prime_representable(u64 m, u64 p) {
    return parametric::type1_search(m, p, false).has_value() ||
           parametric::type2_search(m, p, false).has_value();
}

ExceptionList exceptions_up_to(u64 m, u64 limit, const ScanOptions& options) {
    if (m < 4) throw DomainError("exceptions_up_to needs m >= 4");
    if (limit == 0) throw DomainError("limit must be positive");
    if (limit > kMaxLimit) throw LimitError("limit exceeds the desk-scale cap of 10^9");

    // Phase 1: primes. p | m reduces to the integer m/p, representable iff
    // m/p <= 3; otherwise the witness searches decide.
    std::vector<u64> exceptional_primes;
    const unsigned threads = threads_for(options);
    for_prime_batches(2, limit, [&](const std::vector<u64>& primes) {
        std::vector<char> flags(primes.size(), 0);
        parallel_for(primes.size(), threads, options.chunk_size, [&](std::size_t i) {
            const u64 p = primes[i];
            flags[i] = (m % p == 0) ? (m / p > 3) : !prime_representable(m, p);
        });
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (flags[i]) exceptional_primes.push_back(primes[i]);
        }
    });

    // Phase 2: composites, ascending. Divisor closure means a composite n can
    // only be exceptional if n/q is exceptional for every prime q | n; by
    // induction all its prime factors are exceptional, so candidates are
    // generated as e * q with e exceptional and q an exceptional prime not
    // below the largest prime factor of e (a unique factorization of each n).
    std::set<u64> exceptional{1};
    exceptional.insert(exceptional_primes.begin(), exceptional_primes.end());

    using Candidate = std::pair<u64, std::size_t>;  // (n, index of q)
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
    auto push_successors = [&](u64 e, u64 min_prime) {
        const auto it = std::lower_bound(exceptional_primes.begin(), exceptional_primes.end(), min_prime);
        for (auto q = it; q != exceptional_primes.end(); ++q) {
            const u128 n = checked_mul(e, *q);
            if (n > limit) break;
            heap.push({static_cast<u64>(n), static_cast<std::size_t>(q - exceptional_primes.begin())});
        }
    };
    for (u64 p : exceptional_primes) push_successors(p, p);

    while (!heap.empty()) {
        const u64 n = heap.top().first;
        heap.pop();
        bool survives = true;
        for (const auto& pp : ntheory::factorize(n)) {
            if (!exceptional.contains(n / pp.prime)) {
                survives = false;
                break;
            }
        }
        if (!survives) continue;
        const u64 g = std::gcd(m, n);
        const bool is_exception =
            (n / g == 1) ? (m / g > 3) : !decompose::representable(m, n, 3);
        if (is_exception) {
            exceptional.insert(n);
            push_successors(n, largest_prime_factor(n));
        }
    }

    return ExceptionList{m, limit, {exceptional.begin(), exceptional.end()}};
}

std::optional<u64> exceptional_prime_in(u64 m, u64 lo, u64 hi) {
    if (m < 4) throw DomainError("exceptional_prime_in needs m >= 4");
    if (lo >= hi) throw DomainError("exceptional_prime_in needs lo < hi");
    for (u64 p = lo + 1; p < hi; ++p) {
        if (!ntheory::is_prime(p) || m % p == 0) continue;
        if (!prime_representable(m, p)) return p;
    }
    return std::nullopt;
}

CoverageReport coverage_counts(u64 m, u64 N, const ScanOptions& options) {
    if (m < 4) throw DomainError("coverage_counts needs m >= 4");
    if (N < 8) throw DomainError("coverage_counts needs N >= 8");
    if (N > kMaxLimit) throw LimitError("N exceeds the desk-scale cap of 10^9");

    CoverageReport out;
    out.m = m;
    out.N = N;
    out.bound_rhs = 698.0 * std::pow(static_cast<double>(N), 4.0 / 3.0) /
                    std::pow(static_cast<double>(m), 7.0 / 6.0);
    const unsigned threads = threads_for(options);
    for_prime_batches(N / 2 + 1, N, [&](const std::vector<u64>& batch) {
        std::vector<u64> primes;
        for (u64 p : batch) {
            if (m % p != 0) primes.push_back(p);
        }
        std::vector<unsigned char> covered(primes.size(), 0);  // bit 0: Type I, bit 1: Type II
        parallel_for(primes.size(), threads, options.chunk_size, [&](std::size_t i) {
            const bool t1 = parametric::type1_search(m, primes[i], false).has_value();
            const bool t2 = parametric::type2_search(m, primes[i], false).has_value();
            covered[i] = static_cast<unsigned char>((t1 ? 1 : 0) | (t2 ? 2 : 0));
        });
        for (std::size_t i = 0; i < primes.size(); ++i) {
            ++out.primes_total;
            if (covered[i] & 1) ++out.type1_covered;
            if (covered[i] & 2) ++out.type2_covered;
            if (covered[i] == 0) {
                ++out.uncovered;
                out.uncovered_primes.push_back(primes[i]);
            }
        }
    });
    return out;
}

std::vector<FinalThoughtsRow> final_thoughts_scan(u64 m_lo, u64 m_hi) {
    if (m_lo < 2 || m_lo > m_hi || m_hi > 10'000) {
        throw DomainError("final_thoughts_scan needs 2 <= m_lo <= m_hi <= 10^4");
    }
    std::vector<FinalThoughtsRow> rows;
    for (u64 m = m_lo; m <= m_hi; ++m) {
        FinalThoughtsRow row;
        row.m = m;
        row.m_over_m_plus_1_representable = decompose::representable(m, m + 1, 3);
        for (u64 p = m + 1; p < 2 * m; ++p) {
            if (!ntheory::is_prime(p)) continue;
            // A Type I or II representation has a summand <= 1/p and the
            // other two sum to at most 5/6, forcing p >= (6/5)(m - 1).
            if (m >= 4 && 5 * p < 6 * (m - 1)) {
                row.short_interval_prime = p;
                row.by_interval_criterion = true;
                break;
            }
            const bool rep = m >= 4 ? prime_representable(m, p) : decompose::representable(m, p, 3);
            if (!rep) {
                row.short_interval_prime = p;
                break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace esfrac::sieve

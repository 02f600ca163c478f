#pragma once

// Numerically explicit quantities behind the Type I / Type II prime counts:
// P(x), the Type II sum T and its closed-form and partial-sum upper bounds,
// the prime-count lower bound in (x/2, x], the divisor-bound constants, the
// partial-sum inequalities, the m beyond which (m^2, 2m^2) must hold an
// exceptional prime, and f_m(p).
//
// "log" is the natural logarithm throughout. Exact quantities (T, f_m(p),
// prime counts) never touch floating point.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "esfrac/checked.hpp"

namespace esfrac::bounds {

// Relative slack applied when comparing a floating-point bound against a
// target. Audits accept lhs <= rhs (1 + eps); verdicts require
// bound (1 + eps) < target so a rounding error cannot flip them.
inline constexpr double kCompareEps = 1e-9;

// Largest m accepted by exact-mode threshold scans.
inline constexpr u64 kExactModeMaxM = 20'000;

enum class Mode { coarse, precise, exact };

const char* to_string(Mode mode);

struct Rational {
    u64 num = 0;
    u64 den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct BoundReport {
    u64 m = 0;
    u64 N = 0;
    Rational Q;
    std::optional<u128> T;  // empty when m exceeds the exact-mode guard
    double T1_coarse = 0;
    double T2_coarse = 0;
    double T1_precise = 0;
    double T2_precise = 0;
    double prime_lower = 0;
    bool verdict = false;
};

struct ScanRow {
    u64 m = 0;
    double bound = 0;  // T (exact), T1 + T2 (coarse / precise)
    double prime_lower = 0;
    bool verdict = false;
};

struct DivisorBoundRow {
    std::string name;  // tau, tau1, tau2, tau3, tau6
    double kappa = 0;
    double empirical_sup = 0;
    u64 witness_n = 0;
    bool holds = false;
};

struct DivisorBoundTable {
    u64 search_limit = 0;
    std::array<DivisorBoundRow, 5> rows;
    // u = 2^8 3^4 5^3 7^2 11^2 13 17 ... 61, the maximiser of tau(n)/n^{1/6}.
    std::string structured_u;
    u64 structured_tau = 0;
    double structured_ratio = 0;  // tau(u) / u^{1/6}
    bool all_hold = false;
};

enum class PartialSumForm {
    negative_power,  // sum n^{-alpha} <= r^{-alpha} + (x^{1-alpha} - r^{1-alpha}) / (k (1-alpha))
    positive_power,  // sum n^{alpha}  <  (x + k)^{1+alpha} / (k (1+alpha))
};

struct PartialSumAudit {
    double lhs = 0;
    double rhs = 0;
    bool ok = false;
};

struct PrimeCountCheck {
    u64 x = 0;
    u64 count = 0;  // primes in (x/2, x]
    double lower = 0;
    bool holds = false;
};

// 1/2 log^2 x + 2 log x + 1, an upper bound for sum_{n<=x} tau(n)/n.
double p_of(double x);

// T = sum over a <= b, ab <= N/(m-2) of tau(a+b) (floor(N/(2mab)) + 1).
u128 t_exact(u64 m, u64 N);

// (m/2)(3 + log m)^3 and 2m(3 + log m)^2, valid at N = 2m^2 for m >= 18.
std::pair<double, double> t1_t2_coarse(u64 m);

// (N/m) sum_{a <= sqrt(N/2m)} P(N/(am))/a and
// 2Q sum_{a <= sqrt(Q)} (1 + log(2Q/a))/a with Q = N/(m-2).
std::pair<double, double> t1_t2_precise(u64 m, u64 N);

// N / (2 log N).
double prime_lower(u64 N);

BoundReport bound_report(u64 m, std::optional<u64> N = std::nullopt);

std::vector<ScanRow> type2_threshold_scan(u64 m_lo, u64 m_hi, Mode mode);

PrimeCountCheck prime_count_check(u64 x);

// Suprema of tau(n)/(n-1)^{1/6} and tau'_j(n)/(n-1)^{1/6} over
// 2 <= n <= search_limit against kappa = 138.32, 16.2, 51.3, 32.3, 102.7.
// Throws ClaimViolation on failure unless throw_on_violation is false.
DivisorBoundTable divisor_constant_audit(u64 search_limit, bool throw_on_violation = true);

PartialSumAudit partial_sum_audit(u64 k, u64 r, double x, double alpha, PartialSumForm form);

// Least m such that, with N = 2m^2, N/(2 log N) > c N^{4/3} / m^{7/6}.
u64 exceptional_prime_threshold(double c = 698.1);

// floor(1/2 sum_{t | (p+1)/m} |mu(t)| tau((p+1)/(tm))) for p = -1 (mod m), else 0.
u64 vaughan_f(u64 m, u64 p);

}  // namespace esfrac::bounds

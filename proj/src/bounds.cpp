#include "esfrac/bounds.hpp"

#include <cmath>
#include <numeric>
#include <tuple>

#include "esfrac/ntheory.hpp"

namespace esfrac::bounds {
namespace {

// Keeps the tau table behind t_exact within a few hundred megabytes.
constexpr u64 kMaxExactQ = 50'000'000;

u64 default_N(u64 m) { return narrow_u64(checked_mul(checked_mul(2, m), m)); }

// Largest integer a with a^2 * scale <= N.
u64 floor_sqrt_ratio(u64 N, u64 scale) {
    u64 a = static_cast<u64>(std::sqrt(static_cast<long double>(N) / static_cast<long double>(scale)));
    while (a > 0 && static_cast<u128>(a) * a * scale > N) --a;
    while (static_cast<u128>(a + 1) * (a + 1) * scale <= N) ++a;
    return a;
}

bool verdict_below(double bound, double target) { return bound * (1.0 + kCompareEps) < target; }

bool audit_le(double lhs, double rhs) { return lhs <= rhs * (1.0 + kCompareEps) + kCompareEps; }

struct Kappa {
    const char* name;
    double value;
};

constexpr std::array<Kappa, 5> kKappas{{
    {"tau", 138.32},
    {"tau1", 16.2},
    {"tau2", 51.3},
    {"tau3", 32.3},
    {"tau6", 102.7},
}};

// Each prime power p^a maximising (a+1)/p^{a/6}; above 61 the exponent is 0.
constexpr std::array<ntheory::PrimePower, 18> kStructuredU{{
    {2, 8}, {3, 4}, {5, 3}, {7, 2}, {11, 2}, {13, 1}, {17, 1}, {19, 1}, {23, 1},
    {29, 1}, {31, 1}, {37, 1}, {41, 1}, {43, 1}, {47, 1}, {53, 1}, {59, 1}, {61, 1},
}};

constexpr double kStructuredClaim = 138.313;

}  // namespace

const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::coarse: return "coarse";
        case Mode::precise: return "precise";
        case Mode::exact: return "exact";
    }
    return "exact";
}

double p_of(double x) {
    if (!(x >= 1.0)) throw DomainError("P(x) needs x >= 1");
    const double l = std::log(x);
    return 0.5 * l * l + 2.0 * l + 1.0;
}

u128 t_exact(u64 m, u64 N) {
    if (m < 4) throw DomainError("t_exact needs m >= 4");
    if (N == 0) throw DomainError("t_exact needs N >= 1");
    const u64 q_max = N / (m - 2);  // ab <= N/(m-2)  <=>  ab <= floor(N/(m-2))
    if (q_max > kMaxExactQ) throw LimitError("t_exact: N/(m-2) too large for the exact sum");
    const auto tau = ntheory::divisor_count_table(q_max + 1);
    const u128 two_m = checked_mul(2, m);
    u128 total = 0;
    for (u64 a = 1; a * a <= q_max; ++a) {
        for (u64 b = a; b <= q_max / a; ++b) {
            const u128 per_class = N / (two_m * a * b) + 1;
            total = checked_add(total, checked_mul(tau[a + b], per_class));
        }
    }
    return total;
}

std::pair<double, double> t1_t2_coarse(u64 m) {
    if (m < 18) throw DomainError("coarse bounds need m >= 18");
    const double md = static_cast<double>(m);
    const double l = 3.0 + std::log(md);
    return {md / 2.0 * l * l * l, 2.0 * md * l * l};
}

std::pair<double, double> t1_t2_precise(u64 m, u64 N) {
    if (m < 4) throw DomainError("precise bounds need m >= 4");
    if (N < 2 * m) throw DomainError("precise bounds need N >= 2m");
    const double md = static_cast<double>(m);
    const double Nd = static_cast<double>(N);
    const double Q = Nd / static_cast<double>(m - 2);

    double s1 = 0;
    const u64 a1 = floor_sqrt_ratio(N, 2 * m);
    for (u64 a = 1; a <= a1; ++a) {
        const double ad = static_cast<double>(a);
        s1 += p_of(Nd / (ad * md)) / ad;
    }
    double s2 = 0;
    const u64 a2 = floor_sqrt_ratio(N, m - 2);
    for (u64 a = 1; a <= a2; ++a) {
        const double ad = static_cast<double>(a);
        s2 += (1.0 + std::log(2.0 * Q / ad)) / ad;
    }
    return {Nd / md * s1, 2.0 * Q * s2};
}

double prime_lower(u64 N) {
    if (N < 2) throw DomainError("prime_lower needs N >= 2");
    const double Nd = static_cast<double>(N);
    return Nd / (2.0 * std::log(Nd));
}

BoundReport bound_report(u64 m, std::optional<u64> N_opt) {
    if (m < 4) throw DomainError("bound_report needs m >= 4");
    BoundReport r;
    r.m = m;
    r.N = N_opt ? *N_opt : default_N(m);
    const u64 g = std::gcd(r.N, m - 2);
    r.Q = Rational{r.N / g, (m - 2) / g};
    if (m <= kExactModeMaxM && r.N / (m - 2) <= kMaxExactQ) r.T = t_exact(m, r.N);
    const double md = static_cast<double>(m);
    const double l = 3.0 + std::log(md);
    r.T1_coarse = md / 2.0 * l * l * l;
    r.T2_coarse = 2.0 * md * l * l;
    std::tie(r.T1_precise, r.T2_precise) = t1_t2_precise(m, r.N);
    r.prime_lower = prime_lower(r.N);
    const double bound = r.T ? static_cast<double>(*r.T) : r.T1_precise + r.T2_precise;
    r.verdict = verdict_below(bound, r.prime_lower);
    return r;
}

std::vector<ScanRow> type2_threshold_scan(u64 m_lo, u64 m_hi, Mode mode) {
    if (m_lo > m_hi) throw DomainError("scan needs m_lo <= m_hi");
    if (m_lo < 4) throw DomainError("scan needs m >= 4");
    if (mode == Mode::coarse && m_lo < 18) throw DomainError("coarse mode needs m >= 18");
    if (mode == Mode::exact && m_hi > kExactModeMaxM) {
        throw LimitError("exact mode is limited to m <= 20000");
    }
    std::vector<ScanRow> rows;
    rows.reserve(m_hi - m_lo + 1);
    for (u64 m = m_lo; m <= m_hi; ++m) {
        const u64 N = default_N(m);
        ScanRow row;
        row.m = m;
        switch (mode) {
            case Mode::coarse: {
                const auto [t1, t2] = t1_t2_coarse(m);
                row.bound = t1 + t2;
                break;
            }
            case Mode::precise: {
                const auto [t1, t2] = t1_t2_precise(m, N);
                row.bound = t1 + t2;
                break;
            }
            case Mode::exact:
                row.bound = static_cast<double>(t_exact(m, N));
                break;
        }
        row.prime_lower = prime_lower(N);
        row.verdict = verdict_below(row.bound, row.prime_lower);
        rows.push_back(row);
    }
    return rows;
}

PrimeCountCheck prime_count_check(u64 x) {
    if (x < 3299 || x > 1'000'000'000) throw DomainError("prime_count_check needs 3299 <= x <= 10^9");
    PrimeCountCheck out;
    out.x = x;
    out.count = ntheory::count_primes(x / 2 + 1, x);
    out.lower = prime_lower(x);
    out.holds = static_cast<double>(out.count) > out.lower;
    return out;
}

DivisorBoundTable divisor_constant_audit(u64 search_limit, bool throw_on_violation) {
    if (search_limit < 10'000) throw DomainError("divisor_constant_audit needs search_limit >= 10^4");
    DivisorBoundTable table;
    table.search_limit = search_limit;
    for (std::size_t j = 0; j < kKappas.size(); ++j) {
        table.rows[j].name = kKappas[j].name;
        table.rows[j].kappa = kKappas[j].value;
    }

    const auto tau = ntheory::divisor_count_table(search_limit);
    for (u64 n = 2; n <= search_limit; ++n) {
        u64 v = n, i = 0, k = 0;
        while (v % 2 == 0) {
            v /= 2;
            ++i;
        }
        while (v % 3 == 0) {
            v /= 3;
            ++k;
        }
        const u64 t1 = tau[v];
        const std::array<u64, 5> counts{tau[n], t1, i * t1, k * t1, i * k * t1};
        const double scale = std::cbrt(std::sqrt(static_cast<double>(n - 1)));
        for (std::size_t j = 0; j < counts.size(); ++j) {
            const double ratio = static_cast<double>(counts[j]) / scale;
            if (ratio > table.rows[j].empirical_sup) {
                table.rows[j].empirical_sup = ratio;
                table.rows[j].witness_n = n;
            }
        }
    }

    u128 u = 1;
    long double log_u = 0;
    for (const auto& [p, e] : kStructuredU) {
        for (unsigned r = 0; r < e; ++r) u = checked_mul(u, p);
        log_u += e * std::log(static_cast<long double>(p));
    }
    table.structured_u = esfrac::to_string(u);
    table.structured_tau = narrow_u64(ntheory::divisor_count(kStructuredU));
    table.structured_ratio = static_cast<double>(table.structured_tau / std::exp(log_u / 6.0L));

    table.all_hold = table.structured_ratio < kStructuredClaim;
    for (auto& row : table.rows) {
        row.holds = audit_le(row.empirical_sup, row.kappa);
        table.all_hold = table.all_hold && row.holds;
    }
    if (!table.all_hold && throw_on_violation) {
        throw ClaimViolation("divisor bound audit failed");
    }
    return table;
}

PartialSumAudit partial_sum_audit(u64 k, u64 r, double x, double alpha, PartialSumForm form) {
    if (r < 1 || r > k) throw DomainError("partial_sum_audit needs 1 <= r <= k");
    if (!(x >= static_cast<double>(r))) throw DomainError("partial_sum_audit needs x >= r");
    if (form == PartialSumForm::negative_power && !(alpha >= 0.0 && alpha < 1.0)) {
        throw DomainError("negative-power form needs 0 <= alpha < 1");
    }
    if (form == PartialSumForm::positive_power && !(alpha > 0.0)) {
        throw DomainError("positive-power form needs alpha > 0");
    }
    const long double a = alpha;
    const long double kd = static_cast<long double>(k);
    const long double rd = static_cast<long double>(r);
    const long double xd = x;
    long double lhs = 0;
    for (u64 n = r; static_cast<long double>(n) <= xd; n += k) {
        const long double nd = static_cast<long double>(n);
        lhs += form == PartialSumForm::negative_power ? std::pow(nd, -a) : std::pow(nd, a);
    }
    PartialSumAudit out;
    out.lhs = static_cast<double>(lhs);
    if (form == PartialSumForm::negative_power) {
        const long double rhs =
            std::pow(rd, -a) + (std::pow(xd, 1 - a) - std::pow(rd, 1 - a)) / (kd * (1 - a));
        out.rhs = static_cast<double>(rhs);
        out.ok = audit_le(out.lhs, out.rhs);
    } else {
        const long double rhs = std::pow(xd + kd, 1 + a) / (kd * (1 + a));
        out.rhs = static_cast<double>(rhs);
        out.ok = out.lhs < out.rhs * (1.0 + kCompareEps);
    }
    return out;
}

u64 exceptional_prime_threshold(double c) {
    if (!(c > 0.0)) throw DomainError("threshold needs c > 0");
    const long double cl = c;
    auto primes_win = [cl](u64 m) {
        const long double md = static_cast<long double>(m);
        const long double N = 2.0L * md * md;
        return N / (2.0L * std::log(N)) > cl * std::pow(N, 4.0L / 3.0L) / std::pow(md, 7.0L / 6.0L);
    };
    // sqrt(m)/log(2m^2) decreases up to m ~ 5 and increases afterwards, so
    // the predicate is monotone from m = 6 on.
    for (u64 m = 1; m <= 7; ++m) {
        if (primes_win(m)) return m;
    }
    u64 lo = 7, hi = 8;
    while (!primes_win(hi)) {
        if (hi > (u64{1} << 61)) throw LimitError("threshold beyond 2^62");
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const u64 mid = lo + (hi - lo) / 2;
        (primes_win(mid) ? hi : lo) = mid;
    }
    return hi;
}

u64 vaughan_f(u64 m, u64 p) {
    if (m < 4) throw DomainError("vaughan_f needs m >= 4");
    if (!ntheory::is_prime(p)) throw DomainError("vaughan_f needs prime p");
    const u128 p1 = static_cast<u128>(p) + 1;
    if (p1 % m != 0) return 0;
    const u64 k = static_cast<u64>(p1 / m);
    u128 sum = 0;
    for (u64 t : ntheory::divisors(k)) {
        if (ntheory::mobius(t) == 0) continue;
        sum = checked_add(sum, ntheory::divisor_count(ntheory::factorize(k / t)));
    }
    return narrow_u64(sum / 2);
}

}  // namespace esfrac::bounds

#include "esfrac/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "esfrac/ntheory.hpp"

namespace esfrac::decompose {
namespace {

using ntheory::Factorization;
using ntheory::PrimePower;

// Above this many candidates the plain two-term loop is refused; it only
// happens when the denominator could not be factored (far past desk scale).
constexpr u128 kMaxLinearSpan = u128{1} << 34;

// Residual value num/den (reduced) with the factorization of den when known.
struct Residual {
    u128 num;
    u128 den;
    std::optional<Factorization> den_factors;
};

Factorization merge(const Factorization& lhs, const Factorization& rhs) {
    Factorization out;
    out.reserve(lhs.size() + rhs.size());
    std::size_t i = 0, k = 0;
    while (i < lhs.size() || k < rhs.size()) {
        if (k == rhs.size() || (i < lhs.size() && lhs[i].prime < rhs[k].prime)) {
            out.push_back(lhs[i++]);
        } else if (i == lhs.size() || rhs[k].prime < lhs[i].prime) {
            out.push_back(rhs[k++]);
        } else {
            out.push_back({lhs[i].prime, lhs[i].exponent + rhs[k].exponent});
            ++i;
            ++k;
        }
    }
    return out;
}

// Removes the prime powers of g (which must divide the factored number).
void divide_out(Factorization& f, u128 g) {
    for (auto& pp : f) {
        while (g % pp.prime == 0) {
            g /= pp.prime;
            --pp.exponent;
        }
    }
    std::erase_if(f, [](const PrimePower& pp) { return pp.exponent == 0; });
}

class Search {
public:
    // Visitor returns true to stop the search.
    using Visitor = std::function<bool(const std::vector<u128>&)>;

    explicit Search(Visitor visit) : visit_(std::move(visit)) {}

    bool run(u64 m, u64 n, unsigned j, u128 min_denominator) {
        const u64 g = std::gcd(m, n);
        Residual start{m / g, n / g, ntheory::factorize(n / g)};
        path_.clear();
        return descend(start, j, std::max<u128>(min_denominator, 1));
    }

private:
    bool emit() { return visit_(path_); }

    bool descend(const Residual& r, unsigned terms, u128 min_x) {
        if (terms == 1) {
            if (r.den % r.num != 0) return false;
            const u128 x = r.den / r.num;
            if (x < min_x) return false;
            path_.push_back(x);
            const bool stop = emit();
            path_.pop_back();
            return stop;
        }
        if (terms == 2 && r.den_factors && r.den <= kU64Max) return two_terms(r, min_x);

        // Smallest remaining denominator x satisfies 1/x < r and 1/x >= r/terms.
        u128 lo = r.den / r.num + 1;
        lo = std::max(lo, min_x);
        const u128 hi = checked_mul(r.den, terms) / r.num;
        if (terms == 2 && hi >= lo && hi - lo > kMaxLinearSpan) {
            throw LimitError("two-term range too wide to scan without a factorization");
        }
        for (u128 x = lo; x <= hi; ++x) {
            const u128 num = checked_mul(r.num, x) - r.den;
            const u128 den = checked_mul(r.den, x);
            const u128 g = gcd128(num, den);
            Residual next{num / g, den / g, std::nullopt};
            if (r.den_factors && x <= kU64Max) {
                Factorization f = merge(*r.den_factors, ntheory::factorize(static_cast<u64>(x)));
                divide_out(f, g);
                next.den_factors = std::move(f);
            }
            path_.push_back(x);
            const bool stop = descend(next, terms - 1, x);
            path_.pop_back();
            if (stop) return true;
        }
        return false;
    }

    // a/b = 1/x + 1/y with x <= y  <=>  (a x - b)(a y - b) = b^2 with
    // u = a x - b <= b. Enumerating divisors u of b^2 replaces a linear scan
    // over x in (b/a, 2b/a].
    bool two_terms(const Residual& r, u128 min_x) {
        const u128 a = r.num;
        const u128 b = r.den;
        Factorization squared = *r.den_factors;
        for (auto& pp : squared) pp.exponent *= 2;
        const u128 b2 = b * b;
        for (u128 u : ntheory::expand_divisors(squared)) {
            if (u > b) break;
            if ((u + b) % a != 0) continue;
            const u128 x = (u + b) / a;
            if (x < min_x) continue;
            const u128 v_plus_b = b2 / u + b;
            if (v_plus_b % a != 0) continue;
            path_.push_back(x);
            path_.push_back(v_plus_b / a);
            const bool stop = emit();
            path_.pop_back();
            path_.pop_back();
            if (stop) return true;
        }
        return false;
    }

    Visitor visit_;
    std::vector<u128> path_;
};

void check_args(u64 m, u64 n, unsigned j) {
    if (m == 0 || n == 0) throw DomainError("m and n must be positive");
    if (j == 0 || j > kMaxTerms) throw DomainError("j must lie in [1, 8]");
}

}  // namespace

TargetFraction TargetFraction::reduced() const {
    const u64 g = std::gcd(m, n);
    return {m / g, n / g};
}

const char* to_string(SolutionType t) {
    switch (t) {
        case SolutionType::type_i: return "TypeI";
        case SolutionType::type_ii: return "TypeII";
        case SolutionType::neither: return "Neither";
        case SolutionType::invalid: return "Invalid";
    }
    return "Invalid";
}

bool sums_to(u64 m, u64 n, std::span<const u128> denominators) {
    if (m == 0 || n == 0) return false;
    u128 num = 0, den = 1;
    for (u128 x : denominators) {
        if (x == 0) return false;
        // over lcm(den, x), not den * x
        const u128 l = checked_mul(den / gcd128(den, x), x);
        num = checked_add(checked_mul(num, l / den), l / x);
        den = l;
        const u128 g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    const u64 g = std::gcd(m, n);
    return num == m / g && den == n / g;
}

std::optional<Decomposition> find_decomposition(u64 m, u64 n, unsigned j, u128 min_denominator) {
    check_args(m, n, j);
    std::optional<Decomposition> found;
    Search search([&](const std::vector<u128>& path) {
        found = Decomposition{path};
        return true;
    });
    search.run(m, n, j, min_denominator);
    return found;
}

Enumeration enumerate_decompositions(u64 m, u64 n, unsigned j, std::size_t cap) {
    check_args(m, n, j);
    if (cap == 0) throw DomainError("cap must be at least 1");
    Enumeration out;
    Search search([&](const std::vector<u128>& path) {
        if (out.solutions.size() == cap) {
            out.truncated = true;
            return true;
        }
        out.solutions.push_back(Decomposition{path});
        return false;
    });
    search.run(m, n, j, 1);
    return out;
}

SolutionType classify_triple(u64 m, u64 n, const std::array<u128, 3>& triple) {
    for (u128 x : triple) {
        if (x == 0) return SolutionType::invalid;
    }
    if (!sums_to(m, n, triple)) return SolutionType::invalid;
    int divisible = 0;
    int coprime = 0;
    for (u128 x : triple) {
        if (x % n == 0) {
            ++divisible;
        } else if (gcd128(x, n) == 1) {
            ++coprime;
        }
    }
    if (divisible == 1 && coprime == 2) return SolutionType::type_i;
    if (divisible == 2 && coprime == 1) return SolutionType::type_ii;
    return SolutionType::neither;
}

ThresholdScan jk_threshold_scan(unsigned j, u64 k, u64 m_limit) {
    if (k == 0 || m_limit == 0) throw DomainError("k and m_limit must be positive");
    ThresholdScan out{j, k, {}, std::nullopt};
    for (u64 m = 1; m <= m_limit; ++m) {
        const u64 n = narrow_u64(checked_add(checked_mul(k, m), 1));
        const bool ok = representable(m, n, j);
        out.rows.push_back({m, ok});
        if (ok) out.largest_representable = m;
    }
    return out;
}

}  // namespace esfrac::decompose

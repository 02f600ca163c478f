#include "esfrac/parametric.hpp"

#include <algorithm>
#include <numeric>

#include "esfrac/ntheory.hpp"

namespace esfrac::parametric {
namespace {

void check_args(u64 m, u64 n, bool require_coprime) {
    if (m < 4) throw DomainError("witness search needs m >= 4");
    if (n < 2) throw DomainError("witness search needs n >= 2");
    if (!require_coprime && (!ntheory::is_prime(n) || m % n == 0)) {
        throw DomainError("prime fast path needs prime n not dividing m");
    }
}

using Type1Visitor = std::function<bool(const TypeIWitness&)>;
using Type2Visitor = std::function<bool(const TypeIIWitness&)>;

// Walks s = m a d ascending up to max_mad; for each (a, d) the candidates
// f = c s - n (c >= 1) up to min(m a^2 d + 1, f_cap) are tested for
// f | m a^2 d + 1.
void scan_type1(u64 m, u64 n, u128 max_mad, std::optional<u128> f_cap, bool require_coprime,
                const Type1Visitor& visit) {
    const u128 k_max = max_mad / m;
    for (u128 k = 1; k <= k_max; ++k) {
        const u128 s = checked_mul(m, k);
        const u128 f_first = (n % s == 0) ? s : s - n % s;
        for (u128 a_wide : ntheory::expand_divisors(ntheory::factorize(narrow_u64(k)))) {
            const u64 a = static_cast<u64>(a_wide);
            const u64 d = static_cast<u64>(k / a_wide);
            const u128 big_a = checked_add(checked_mul(s, a), 1);  // m a^2 d + 1
            const u128 f_max = f_cap ? std::min(big_a, *f_cap) : big_a;
            for (u128 f = f_first; f <= f_max; f += s) {
                if (big_a % f != 0) continue;
                const u128 c = (n + f) / s;
                if (require_coprime && gcd128(c, n) != 1) continue;
                const u128 e = big_a / f;
                TypeIWitness w{a, d, narrow_u64(f), e, c, checked_mul(c, e) - a};
                if (visit(w)) return;
            }
        }
    }
}

// m a b >= 4ab > a + b, so e is forced to be the least positive residue of
// -n modulo m a b.
void scan_type2(u64 m, u64 n, bool require_coprime, const Type2Visitor& visit) {
    const u128 limit = checked_mul(2, n);
    for (u64 a = 1; checked_mul(checked_mul(m, a), a) <= limit; ++a) {
        for (u64 b = a;; ++b) {
            const u128 s = checked_mul(checked_mul(m, a), b);
            if (s > limit) break;
            const u128 e = (s - n % s) % s;
            if (e == 0 || e > a + b || (a + b) % e != 0) continue;
            if (require_coprime && gcd128((n + e) / m, n) != 1) continue;
            const auto eu = static_cast<u64>(e);
            TypeIIWitness w{a, b, eu, (a + b) / eu, static_cast<u64>((n + e) / s)};
            if (visit(w)) return;
        }
    }
}

decompose::Decomposition sorted_triple(u128 x, u128 y, u128 z) {
    decompose::Decomposition out{{x, y, z}};
    std::sort(out.denominators.begin(), out.denominators.end());
    return out;
}

}  // namespace

std::optional<TypeIWitness> make_type1_witness(u64 m, u64 n, u64 a, u64 d, u64 f) {
    if (m == 0 || n == 0 || a == 0 || d == 0 || f == 0) return std::nullopt;
    const u128 s = checked_mul(checked_mul(m, a), d);
    const u128 big_a = checked_add(checked_mul(s, a), 1);
    const u128 n_plus_f = checked_add(n, f);
    if (big_a % f != 0 || n_plus_f % s != 0) return std::nullopt;
    const u128 e = big_a / f;
    const u128 c = n_plus_f / s;
    const u128 ce = checked_mul(c, e);
    if (ce <= a) return std::nullopt;
    return TypeIWitness{a, d, f, e, c, ce - a};
}

std::optional<TypeIIWitness> make_type2_witness(u64 m, u64 n, u64 a, u64 b, u64 e) {
    if (m == 0 || n == 0 || a == 0 || b == 0 || e == 0) return std::nullopt;
    const u128 sum = checked_add(a, b);
    const u128 s = checked_mul(checked_mul(m, a), b);
    const u128 n_plus_e = checked_add(n, e);
    if (sum % e != 0 || n_plus_e % s != 0) return std::nullopt;
    return TypeIIWitness{a, b, e, narrow_u64(sum / e), narrow_u64(n_plus_e / s)};
}

std::optional<TypeIWitness> type1_search(u64 m, u64 n, bool require_coprime) {
    check_args(m, n, require_coprime);
    // With y <= z (a <= b) every Type I witness has f <= n (m+1)/(m-1) and
    // m a d <= 2n + 1; swapping y and z turns any solution into such a one.
    const u128 f_cap = checked_mul(n, m + 1) / (m - 1);
    std::optional<TypeIWitness> found;
    scan_type1(m, n, checked_add(checked_mul(2, n), 1), f_cap, require_coprime, [&](const TypeIWitness& w) {
        found = w;
        return true;
    });
    return found;
}

std::optional<TypeIIWitness> type2_search(u64 m, u64 n, bool require_coprime) {
    check_args(m, n, require_coprime);
    std::optional<TypeIIWitness> found;
    scan_type2(m, n, require_coprime, [&](const TypeIIWitness& w) {
        found = w;
        return true;
    });
    return found;
}

std::vector<TypeIWitness> type1_witnesses(u64 m, u64 n, u128 max_mad, bool require_coprime) {
    check_args(m, n, require_coprime);
    std::vector<TypeIWitness> out;
    scan_type1(m, n, max_mad, std::nullopt, require_coprime, [&](const TypeIWitness& w) {
        out.push_back(w);
        return false;
    });
    return out;
}

std::vector<TypeIIWitness> type2_witnesses(u64 m, u64 n, bool require_coprime) {
    check_args(m, n, require_coprime);
    std::vector<TypeIIWitness> out;
    scan_type2(m, n, require_coprime, [&](const TypeIIWitness& w) {
        out.push_back(w);
        return false;
    });
    return out;
}

decompose::Decomposition type1_triple(u64 m, u64 n, const TypeIWitness& w) {
    const auto derived = make_type1_witness(m, n, w.a, w.d, w.f);
    if (!derived) throw InvalidWitness("Type I witness fails f | m a^2 d + 1 or m a d | n + f");
    if (w.e != derived->e || w.c != derived->c || w.b != derived->b) {
        throw InvalidWitness("Type I witness carries inconsistent derived values");
    }
    const u128 bd = checked_mul(w.b, w.d);
    const u128 cd = checked_mul(w.c, w.d);
    return sorted_triple(checked_mul(checked_mul(bd, w.a), n), checked_mul(cd, w.a), checked_mul(cd, w.b));
}

decompose::Decomposition type2_triple(u64 m, u64 n, const TypeIIWitness& w) {
    const auto derived = make_type2_witness(m, n, w.a, w.b, w.e);
    if (!derived) throw InvalidWitness("Type II witness fails e | a + b or m a b | n + e");
    if (w.c != derived->c || w.d != derived->d) {
        throw InvalidWitness("Type II witness carries inconsistent derived values");
    }
    const u128 cdn = checked_mul(checked_mul(w.c, w.d), n);
    return sorted_triple(checked_mul(checked_mul(w.a, w.b), w.d), checked_mul(cdn, w.a), checked_mul(cdn, w.b));
}

u128 type1_bound_check(u64 m, u64 p) {
    check_args(m, p, false);
    const u128 extended = checked_add(checked_mul(4, p), 2);
    u128 best = 0;
    scan_type1(m, p, extended, std::nullopt, false, [&](const TypeIWitness& w) {
        if (w.a <= w.b) best = std::max(best, w.mad(m));
        return false;
    });
    return best;
}

}  // namespace esfrac::parametric

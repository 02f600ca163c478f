#include "esfrac/ntheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace esfrac {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace esfrac

namespace esfrac::ntheory {
namespace {

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint32_t> simple_sieve(std::uint32_t limit) {
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool strong_probable_prime(u64 n, u64 a) {
    a %= n;
    if (a == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's variant of Pollard rho; n must be odd and composite.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 batch = 128;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += batch) {
                ys = y;
                for (u64 i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
    static const std::vector<std::uint32_t> table = simple_sieve(65535);
    return table;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    if (n < 37 * 37) return true;
    // Sinclair's seven bases are deterministic for every n < 2^64.
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (!strong_probable_prime(n, a)) return false;
    }
    return true;
}

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit, u64 segment_size) {
    if (hi < 2 || lo > hi) return;
    lo = std::max<u64>(lo, 2);
    if (segment_size == 0) throw DomainError("segment size must be positive");
    const u64 root = isqrt(hi);
    if (root > (u64{1} << 26)) {
        // Base table would not fit the budget; fall back to per-number tests.
        for (u64 n = lo;; ++n) {
            if (is_prime(n)) visit(n);
            if (n == hi) break;
        }
        return;
    }
    const auto base = simple_sieve(static_cast<std::uint32_t>(root));
    std::vector<char> mark;
    for (u64 start = lo;; ) {
        const u64 end = (hi - start < segment_size - 1) ? hi : start + segment_size - 1;
        mark.assign(end - start + 1, 1);
        for (std::uint32_t p : base) {
            const u64 pp = u64{p} * p;
            if (pp > end) break;
            u64 first = std::max(pp, (start + p - 1) / p * p);
            for (u64 j = first; j <= end; j += p) {
                mark[j - start] = 0;
                if (end - j < p) break;
            }
        }
        for (u64 i = 0; i < mark.size(); ++i) {
            if (mark[i]) visit(start + i);
        }
        if (end == hi) break;
        start = end + 1;
    }
}

PrimeRange sieve_primes(u64 lo, u64 hi, const SieveOptions& options) {
    if (lo > hi) throw DomainError("sieve_primes: lo > hi");
    if (hi - lo > options.span_budget) {
        throw LimitError("sieve_primes: range exceeds span budget; chunk the request");
    }
    PrimeRange out{lo, hi, {}};
    for_each_prime(lo, hi, [&](u64 p) { out.primes.push_back(p); }, options.segment_size);
    return out;
}

u64 count_primes(u64 lo, u64 hi) {
    u64 count = 0;
    for_each_prime(lo, hi, [&](u64) { ++count; });
    return count;
}

Factorization factorize(u64 n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    Factorization out;
    for (std::uint32_t p : small_primes()) {
        if (u64{p} * p > n) break;
        if (n % p != 0) continue;
        unsigned e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        out.push_back({p, e});
    }
    if (n == 1) return out;
    // Every prime below 2^16 has been removed, so a cofactor below 2^32 is prime.
    if (n < (u64{1} << 32)) {
        out.push_back({n, 1});
        return out;
    }
    std::vector<u64> big;
    split_large(n, big);
    std::sort(big.begin(), big.end());
    for (u64 p : big) {
        if (!out.empty() && out.back().prime == p) {
            ++out.back().exponent;
        } else {
            out.push_back({p, 1});
        }
    }
    return out;
}

std::vector<u128> expand_divisors(std::span<const PrimePower> factors) {
    std::vector<u128> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t count = divs.size();
        u128 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk = checked_mul(pk, p);
            for (std::size_t i = 0; i < count; ++i) divs.push_back(checked_mul(divs[i], pk));
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<u64> divisors(u64 n) {
    const auto f = factorize(n);
    const auto wide = expand_divisors(f);
    return {wide.begin(), wide.end()};
}

u128 divisor_count(std::span<const PrimePower> factors) {
    u128 tau = 1;
    for (const auto& pp : factors) tau = checked_mul(tau, pp.exponent + 1);
    return tau;
}

DivisorProfile divisor_profile(std::span<const PrimePower> factors) {
    // n = 2^i 3^k v with gcd(v, 6) = 1. A divisor with gcd(d,6) = j picks a
    // positive power of each prime dividing j and none of the others.
    u64 i = 0, k = 0, tau_v = 1;
    u128 n = 1;
    for (const auto& [p, e] : factors) {
        for (unsigned r = 0; r < e; ++r) n = checked_mul(n, p);
        if (p == 2) {
            i = e;
        } else if (p == 3) {
            k = e;
        } else {
            tau_v = narrow_u64(checked_mul(tau_v, e + 1));
        }
    }
    DivisorProfile out;
    out.n = n;
    out.tau1 = tau_v;
    out.tau2 = i * tau_v;
    out.tau3 = k * tau_v;
    out.tau6 = i * k * tau_v;
    out.tau = out.tau1 + out.tau2 + out.tau3 + out.tau6;
    return out;
}

DivisorProfile divisor_profile(u64 n) {
    if (n == 0) throw DomainError("divisor_profile: n must be positive");
    return divisor_profile(factorize(n));
}

int mobius(u64 n) {
    if (n == 0) throw DomainError("mobius: n must be positive");
    int mu = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) return 0;
        mu = -mu;
    }
    return mu;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw DomainError("euler_phi: n must be positive");
    u64 phi = n;
    for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

std::vector<std::uint32_t> divisor_count_table(u64 limit) {
    std::vector<std::uint32_t> tau(limit + 1, 0);
    for (u64 d = 1; d <= limit; ++d) {
        for (u64 k = d; k <= limit; k += d) ++tau[k];
    }
    return tau;
}

}  // namespace esfrac::ntheory

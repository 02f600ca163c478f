#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// library, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

inline u64 tau(u64 n) {
    u64 t = 0;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) t += (d * d == n) ? 1 : 2;
    }
    return t;
}

inline u128 gcd(u128 a, u128 b) {
    while (b) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// m * prod(x_i) == n * sum_i prod_{k != i} x_k, evaluated as a reduced
// running fraction so large triples stay inside 128 bits.
inline bool identity(u64 m, u64 n, const std::vector<u128>& xs) {
    u128 num = 0, den = 1;
    for (u128 x : xs) {
        if (x == 0) return false;
        // num/den + 1/x
        const u128 g = gcd(den, x);
        const u128 l = den / g * x;
        num = num * (l / den) + l / x;
        den = l;
        const u128 h = gcd(num, den);
        num /= h;
        den /= h;
    }
    const u128 g = gcd(m, n);
    return num == m / g && den == n / g;
}

// Every (x <= y <= z) with 1/x + 1/y + 1/z = m/n, by direct solution for z.
// Stops after `cap` solutions. Independent of the library's DFS.
inline std::vector<std::vector<u128>> triples(u64 m, u64 n, std::size_t cap = ~std::size_t{0}) {
    std::vector<std::vector<u128>> out;
    const u128 mm = m, nn = n;
    // 1/x <= m/n <= 3/x
    for (u128 x = (nn + mm - 1) / mm; x * mm <= 3 * nn; ++x) {
        // residual r1 = m/n - 1/x = (m x - n)/(n x)
        if (mm * x < nn) continue;
        const u128 a1 = mm * x - nn, b1 = nn * x;
        if (a1 == 0) continue;
        // y >= x, 1/y <= a1/b1 <= 2/y
        u128 y = std::max(x, (b1 + a1 - 1) / a1);
        for (; y * a1 <= 2 * b1; ++y) {
            // 1/z = a1/b1 - 1/y = (a1 y - b1)/(b1 y)
            if (a1 * y <= b1) continue;
            const u128 a2 = a1 * y - b1, b2 = b1 * y;
            if (b2 % a2 != 0) continue;
            const u128 z = b2 / a2;
            if (z < y) continue;
            out.push_back({x, y, z});
            if (out.size() >= cap) return out;
        }
    }
    return out;
}

inline bool representable3(u64 m, u64 n) { return !triples(m, n, 1).empty(); }

// Generic j-term existence by plain recursion on a reduced residual.
inline bool representable(u128 a, u128 b, unsigned j, u128 min_x = 1) {
    if (a == 0) return false;
    const u128 g = gcd(a, b);
    a /= g;
    b /= g;
    if (j == 1) return a == 1 && b >= min_x;
    for (u128 x = std::max(min_x, (b + a - 1) / a); x * a <= j * b; ++x) {
        if (a * x < b) continue;
        if (a * x == b) continue;  // residual would be zero with terms left
        if (representable(a * x - b, b * x, j - 1, x)) return true;
    }
    return false;
}

// T by direct double loop, no divisor table.
inline u128 t_sum(u64 m, u64 N) {
    u128 total = 0;
    for (u64 a = 1; (u128)a * a * (m - 2) <= N; ++a) {
        for (u64 b = a; (u128)a * b * (m - 2) <= N; ++b) {
            total += (u128)tau(a + b) * (N / ((u128)2 * m * a * b) + 1);
        }
    }
    return total;
}

}  // namespace oracle

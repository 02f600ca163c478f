#pragma once

// Overflow-checked 128-bit helpers. Everything in the decision paths of the
// library stays in exact integer arithmetic; these are the only primitives
// allowed to widen or combine values.

#include <cstdint>
#include <limits>
#include <string>

#include "esfrac/errors.hpp"

namespace esfrac {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~static_cast<u128>(0);
inline constexpr u64 kU64Max = std::numeric_limits<u64>::max();

inline u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
    return r;
}

inline u128 checked_add(u128 a, u128 b) {
    u128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
    return r;
}

inline u64 narrow_u64(u128 v) {
    if (v > kU64Max) throw OverflowError("value does not fit in 64 bits");
    return static_cast<u64>(v);
}

inline u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline u128 ceil_div(u128 a, u128 b) { return a / b + (a % b != 0 ? 1 : 0); }

std::string to_string(u128 v);

}  // namespace esfrac

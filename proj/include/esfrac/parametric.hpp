#pragma once

// Parametric Type I / Type II witnesses for m/n = 1/x + 1/y + 1/z.
//
//   Type I  (n | x, gcd(n, yz) = 1): a, d, f with f | m a^2 d + 1 and
//           m a d | n + f. Then e = (m a^2 d + 1)/f, c = (n + f)/(m a d),
//           b = c e - a and (x, y, z) = (a b d n, a c d, b c d).
//   Type II (n | y, n | z, gcd(n, x) = 1): a, b, e with e | a + b and
//           m a b | n + e. Then c = (a + b)/e, d = (n + e)/(m a b) and
//           (x, y, z) = (a b d, a c d n, b c d n).
//
// For prime n not dividing m (m >= 4) the divisibility conditions alone are
// necessary and sufficient. For composite n the extra coprimality condition
// ((n + f)/(m a d) resp. (n + e)/m coprime to n) is required.

#include <functional>
#include <optional>
#include <vector>

#include "esfrac/checked.hpp"
#include "esfrac/decompose.hpp"

namespace esfrac::parametric {

struct TypeIWitness {
    u64 a = 0;
    u64 d = 0;
    u64 f = 0;
    u128 e = 0;
    u128 c = 0;
    u128 b = 0;

    u128 mad(u64 m) const { return checked_mul(checked_mul(m, a), d); }
    friend bool operator==(const TypeIWitness&, const TypeIWitness&) = default;
};

struct TypeIIWitness {
    u64 a = 0;
    u64 b = 0;
    u64 e = 0;
    u64 c = 0;
    u64 d = 0;

    u128 mab(u64 m) const { return checked_mul(checked_mul(m, a), b); }
    friend bool operator==(const TypeIIWitness&, const TypeIIWitness&) = default;
};

// Derives e, c, b from (a, d, f); empty when f does not divide m a^2 d + 1 or
// m a d does not divide n + f.
std::optional<TypeIWitness> make_type1_witness(u64 m, u64 n, u64 a, u64 d, u64 f);

// Derives c, d from (a, b, e); empty when e does not divide a + b or m a b
// does not divide n + e.
std::optional<TypeIIWitness> make_type2_witness(u64 m, u64 n, u64 a, u64 b, u64 e);

// First Type I witness with m a d <= 2n + 1, scanning m a d ascending.
// require_coprime = false is the prime fast path and needs prime n with n
// not dividing m; require_coprime = true enforces the general condition.
std::optional<TypeIWitness> type1_search(u64 m, u64 n, bool require_coprime);

// First Type II witness with a <= b and m a b <= 2n (a outer, b inner).
std::optional<TypeIIWitness> type2_search(u64 m, u64 n, bool require_coprime);

// Every Type I witness with m a d <= max_mad (full divisor range for f).
std::vector<TypeIWitness> type1_witnesses(u64 m, u64 n, u128 max_mad, bool require_coprime);

// Every Type II witness with a <= b and m a b <= 2n.
std::vector<TypeIIWitness> type2_witnesses(u64 m, u64 n, bool require_coprime);

// (a b d n, a c d, b c d), sorted. Throws InvalidWitness if w is inconsistent.
decompose::Decomposition type1_triple(u64 m, u64 n, const TypeIWitness& w);

// (a b d, a c d n, b c d n), sorted. Throws InvalidWitness if w is inconsistent.
decompose::Decomposition type2_triple(u64 m, u64 n, const TypeIIWitness& w);

// Largest m a d over the Type I witnesses with a <= b found by a scan that
// deliberately extends to m a d <= 4p + 2; 0 when p has no Type I witness.
// Any Type I solution with y <= z satisfies m a d <= 2p + 1, so the result
// is expected never to exceed 2p + 1.
u128 type1_bound_check(u64 m, u64 p);

}  // namespace esfrac::parametric

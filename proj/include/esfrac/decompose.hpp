#pragma once

// Exact decision and enumeration of m/n = 1/x_1 + ... + 1/x_j.
//
// "A sum of j unit fractions" always means exactly j terms with repeats
// allowed. Because 1/x = 1/(x+1) + 1/(x(x+1)), exactly-j and at-most-j agree
// on existence whenever m/n is representable with fewer terms.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "esfrac/checked.hpp"

namespace esfrac::decompose {

inline constexpr unsigned kMaxTerms = 8;

struct TargetFraction {
    u64 m = 1;
    u64 n = 1;

    TargetFraction reduced() const;
};

// Nondecreasing denominators whose reciprocals sum to m/n exactly.
struct Decomposition {
    std::vector<u128> denominators;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class SolutionType { type_i, type_ii, neither, invalid };

const char* to_string(SolutionType t);

struct Enumeration {
    std::vector<Decomposition> solutions;  // lexicographic order
    bool truncated = false;                // more than `cap` solutions exist
};

struct ThresholdRow {
    u64 m;
    bool representable;
};

struct ThresholdScan {
    u64 j = 0;
    u64 k = 0;
    std::vector<ThresholdRow> rows;
    std::optional<u64> largest_representable;
};

// True iff the reciprocals of `denominators` sum to exactly m/n.
bool sums_to(u64 m, u64 n, std::span<const u128> denominators);

// Some representation with every denominator >= min_denominator, or empty.
// Throws OverflowError when an intermediate leaves 128 bits and DomainError
// for j outside [1, kMaxTerms].
std::optional<Decomposition> find_decomposition(u64 m, u64 n, unsigned j, u128 min_denominator = 1);

inline bool representable(u64 m, u64 n, unsigned j) { return find_decomposition(m, n, j).has_value(); }

Enumeration enumerate_decompositions(u64 m, u64 n, unsigned j, std::size_t cap);

// Type pattern of (x, y, z) relative to n, up to permutation. Invalid when the
// triple does not represent m/n.
SolutionType classify_triple(u64 m, u64 n, const std::array<u128, 3>& triple);

// For 1 <= m <= m_limit, whether m/(k m + 1) is a sum of j unit fractions.
ThresholdScan jk_threshold_scan(unsigned j, u64 k, u64 m_limit);

}  // namespace esfrac::decompose

#pragma once

// All n <= N with m/n not a sum of three unit fractions, m = 4..15 (N is at
// least 10^12, so these are complete below 10^5).

#include <cstdint>
#include <map>
#include <vector>

namespace known {

inline const std::map<std::uint64_t, std::vector<std::uint64_t>>& rows() {
    static const std::map<std::uint64_t, std::vector<std::uint64_t>> t{
        {4, {1}},
        {5, {1}},
        {6, {1}},
        {7, {1, 2}},
        {8, {1, 2, 3, 11, 17, 131, 241}},
        {9, {1, 2, 5, 11, 19}},
        {10, {1, 2, 3, 7, 11, 43, 61, 67, 181}},
        {11, {1, 2, 3, 4, 37}},
        {12, {1, 2, 3, 5, 7, 13, 25, 29, 31, 37, 73, 97, 193, 433, 577, 1129, 1657, 1873, 2521, 2593, 3433,
              10369, 12049, 12241}},
        {13, {1, 2, 3, 4, 5, 7, 14, 53, 61, 67, 79, 211, 281}},
        {14, {1, 2, 3, 4, 5, 17, 19, 29, 59, 257, 353, 841}},
        {15, {1, 2, 3, 4, 8, 16, 17, 19, 23, 31, 34, 47, 53, 61, 79, 113, 122, 137, 151, 197, 226, 233, 271,
              541, 1103, 1171, 1367, 4201, 6301, 12601, 16831, 20521}},
    };
    return t;
}

inline const std::vector<std::uint64_t>& row(std::uint64_t m) { return rows().at(m); }

inline const std::map<std::uint64_t, std::uint64_t> counts{
    {4, 1}, {5, 1}, {6, 1}, {7, 2}, {8, 7}, {9, 5}, {10, 9}, {11, 5}, {12, 24}, {13, 13}, {14, 12}, {15, 32},
};

}  // namespace known

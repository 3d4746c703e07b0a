#pragma once

// Values produced by tests/oracle/derive.py and frozen here.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline const std::map<std::pair<std::uint64_t, unsigned>, std::pair<std::uint64_t, std::vector<std::int64_t>>> kClassical = {
    {{2, 2}, {7, {0, 1, 5}}},
    {{3, 2}, {13, {0, 1, 5, 11}}},
    {{4, 2}, {21, {0, 1, 4, 14, 16}}},
    {{5, 2}, {31, {0, 1, 3, 10, 14, 26}}},
    {{7, 2}, {57, {0, 1, 6, 21, 28, 44, 46, 54}}},
    {{8, 2}, {73, {0, 1, 11, 20, 38, 43, 59, 67, 71}}},
    {{9, 2}, {91, {0, 1, 12, 15, 25, 48, 57, 65, 85, 87}}},
    {{2, 3}, {15, {0, 1, 2, 7, 9, 12, 13}}},
};

inline const std::vector<std::int64_t> kIntegers200 = {
    -13401, -13301, -11425, -11328, -9953, -9858, -8390, -8305, -7664, -7576, -6618, -6536, -5418,
    -5340,  -4324,  -4250,  -2825,  -2767, -2161, -2110, -1672, -1624, -1232, -1192, -975,  -939,
    -713,   -679,   -523,   -497,   -324,  -300,  -129,  -113,  -80,   -66,   -27,   -20,   -9,
    -5,     0,      1,      3,      32,    45,    122,   139,   209,   228,   378,   403,   750,
    785,    823,    1209,   1252,   1874,  1929,  2494,  2550,  2612,  3419,  3483,  3994,  4062,
    4828,   4904,   6191,   6270,   7296,  7380,  7472,  8691,  8782,  10103, 10199, 11879, 11978};

inline const std::vector<std::string> kFree100 = {
    "e", "a", "b", "a^-1*b^-1", "a^-1*a^-1*a^-1*b^-1", "b^-1*b^-1", "b^-1*a^-1*b^-1*b^-1", "a*a*b^-1",
    "a^-1*b*a^-1", "a*b^-1*a^-1*a^-1*b*a^-1", "a*b^-1*b^-1*a", "a*b^-1*b^-1*a^-1", "b^-1*a*a*a*b^-1*b^-1*a^-1",
    "a^-1*a^-1*b^-1*a", "b*a*b*a", "a^-1*b^-1*a*b*a*b*a", "b*a*b^-1*a^-1", "b^-1*b^-1*a*b*a*b^-1*a^-1",
    "b*a^-1*b*a", "b*a^-1*a^-1*b*a", "b^-1*a*b*b", "b^-1*a^-1*a^-1*a^-1",
    "a^-1*a^-1*a^-1*a^-1*b^-1*a^-1*a^-1*a^-1", "a*a*b*a^-1*b", "b*a^-1*b*a^-1*b", "a*a*b*a*a", "a*b*a^-1*b*b",
    "b^-1*b^-1*a^-1*b*a^-1*b*b", "a*b*a*a*b", "a*b*b*b*a", "b^-1*a^-1*b*b*a", "a^-1*a^-1*b*a*b",
    "b*a^-1*b^-1*a^-1*a^-1*a^-1*b*a*b", "a^-1*a^-1*b*b*b", "a^-1*b^-1*b^-1*a^-1*a^-1*a^-1*b*b*b",
    "a^-1*b*a*b^-1*a", "b^-1*a^-1*b*a^-1*a^-1*b*a*b^-1*a", "a^-1*b*a^-1*b^-1*a^-1",
    "b^-1*a*b*a^-1*a^-1*b*a^-1*b^-1*a^-1", "a^-1*b*b*a^-1*a^-1", "b*b*b*a^-1*a^-1*b*b*a^-1*a^-1",
    "b*b*b*b*a^-1", "b*b*a*a*b*b*b*b*a^-1", "b^-1*b^-1*b^-1*a*b", "b^-1*a*b^-1*a*b^-1*b^-1*b^-1*a*b",
    "a*a*a*a*b^-1*a", "a^-1*b^-1*b^-1*a*a*a*a*a*b^-1*a", "a*a*a*b*b*a^-1", "b^-1*a^-1*b*a*a*a*a*b*b*a^-1"};

// invertible matrices, and how many of them fix a projective point
inline constexpr std::pair<std::size_t, std::size_t> kFixedGf2Dim3{168, 120};
inline constexpr std::pair<std::size_t, std::size_t> kFixedGf3Dim2{48, 30};

// pairs 1 <= i <= j <= 12, i | j, with p^{2i}+p^i+1 dividing p^{2j}+p^j+1
inline const std::map<std::uint64_t, std::size_t> kLemmaDividing{{2, 27}, {3, 27}, {5, 27}, {7, 27}};

// regular subgroups of C_n wr S_{m+1}, keyed (n, m)
inline const std::map<std::pair<unsigned, unsigned>, std::size_t> kRegularSubgroups{
    {{1, 2}, 1}, {{1, 3}, 4}, {{2, 1}, 2}, {{2, 2}, 8}, {{3, 1}, 4}, {{3, 2}, 9}, {{1, 5}, 80}, {{2, 3}, 64}};

}  // namespace oracle

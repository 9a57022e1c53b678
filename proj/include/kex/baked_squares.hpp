#pragma once

// Curated n x n proper colorings of K_{n,n} for odd n in {3,...,31}.
// Each table is a Latin square on symbols 1..n; row i / column j give the
// color of edge p_{i+1} q_{j+1}.  The tables were selected for strong-cycle
// coverage (see strong cycle census in standard_coloring.hpp); they are
// frozen data, so construction is deterministic and reproducible.

#include <vector>

namespace kex::baked {

inline constexpr int square_3[9] = {
    1, 3, 2,
    3, 2, 1,
    2, 1, 3,
};

inline constexpr int square_5[25] = {
    1, 4, 3, 5, 2,
    5, 2, 1, 4, 3,
    3, 1, 5, 2, 4,
    4, 5, 2, 3, 1,
    2, 3, 4, 1, 5,
};

inline constexpr int square_7[49] = {
    1, 5, 7, 4, 6, 3, 2,
    7, 2, 1, 3, 5, 6, 4,
    6, 1, 3, 2, 7, 4, 5,
    4, 3, 2, 7, 1, 5, 6,
    5, 7, 6, 1, 4, 2, 3,
    3, 6, 4, 5, 2, 7, 1,
    2, 4, 5, 6, 3, 1, 7,
};

inline constexpr int square_9[81] = {
    1, 6, 4, 9, 5, 7, 8, 3, 2,
    6, 2, 1, 4, 7, 8, 5, 9, 3,
    4, 1, 3, 2, 6, 9, 7, 8, 5,
    5, 4, 2, 6, 1, 3, 9, 7, 8,
    9, 8, 6, 1, 4, 2, 3, 5, 7,
    8, 7, 9, 3, 2, 5, 1, 4, 6,
    7, 9, 8, 5, 3, 1, 6, 2, 4,
    3, 5, 7, 8, 9, 4, 2, 6, 1,
    2, 3, 5, 7, 8, 6, 4, 1, 9,
};

inline constexpr int square_11[121] = {
    1, 11, 4, 9, 10, 6, 8, 7, 5, 3, 2,
    10, 2, 1, 3, 5, 7, 9, 11, 8, 6, 4,
    4, 1, 3, 2, 11, 5, 7, 8, 9, 10, 6,
    9, 3, 2, 5, 1, 4, 6, 10, 11, 8, 7,
    8, 5, 11, 1, 4, 2, 3, 6, 7, 9, 10,
    11, 10, 5, 4, 2, 8, 1, 3, 6, 7, 9,
    6, 7, 9, 10, 3, 1, 11, 2, 4, 5, 8,
    7, 8, 10, 11, 6, 3, 2, 9, 1, 4, 5,
    5, 6, 7, 8, 9, 11, 4, 1, 10, 2, 3,
    3, 9, 8, 6, 7, 10, 5, 4, 2, 11, 1,
    2, 4, 6, 7, 8, 9, 10, 5, 3, 1, 11,
};

inline constexpr int square_13[169] = {
    1, 10, 4, 6, 12, 7, 13, 8, 9, 11, 5, 3, 2,
    9, 2, 1, 4, 6, 10, 8, 12, 11, 13, 7, 5, 3,
    4, 1, 3, 2, 13, 6, 11, 7, 10, 8, 12, 9, 5,
    6, 4, 2, 5, 1, 3, 7, 13, 8, 10, 11, 12, 9,
    12, 6, 13, 1, 4, 2, 3, 5, 7, 9, 8, 10, 11,
    11, 12, 6, 3, 2, 13, 1, 4, 5, 7, 9, 8, 10,
    8, 13, 9, 12, 3, 1, 6, 2, 4, 5, 10, 11, 7,
    10, 11, 12, 13, 5, 4, 2, 9, 1, 3, 6, 7, 8,
    7, 8, 10, 11, 9, 5, 4, 1, 13, 2, 3, 6, 12,
    13, 9, 7, 8, 10, 11, 5, 3, 2, 12, 1, 4, 6,
    5, 7, 8, 10, 11, 12, 9, 6, 3, 1, 13, 2, 4,
    3, 5, 11, 9, 7, 8, 12, 10, 6, 4, 2, 13, 1,
    2, 3, 5, 7, 8, 9, 10, 11, 12, 6, 4, 1, 13,
};

inline constexpr int square_15[225] = {
    1, 15, 4, 11, 5, 12, 8, 13, 7, 9, 14, 6, 10, 3, 2,
    15, 2, 1, 3, 11, 5, 14, 8, 9, 7, 12, 10, 6, 13, 4,
    4, 1, 3, 2, 15, 8, 5, 10, 11, 12, 7, 13, 14, 6, 9,
    11, 3, 2, 5, 1, 4, 13, 12, 10, 8, 15, 7, 9, 14, 6,
    5, 9, 15, 1, 4, 2, 3, 14, 6, 10, 8, 12, 7, 11, 13,
    14, 5, 11, 4, 2, 7, 1, 3, 15, 6, 10, 8, 13, 9, 12,
    12, 13, 5, 9, 3, 1, 10, 2, 4, 14, 6, 11, 15, 7, 8,
    9, 10, 13, 15, 14, 3, 2, 6, 1, 4, 11, 5, 8, 12, 7,
    7, 8, 12, 14, 6, 15, 4, 1, 13, 2, 3, 9, 5, 10, 11,
    13, 7, 9, 10, 8, 6, 12, 4, 2, 15, 1, 3, 11, 5, 14,
    10, 14, 7, 12, 13, 11, 6, 15, 3, 1, 9, 2, 4, 8, 5,
    6, 11, 14, 7, 12, 13, 9, 5, 8, 3, 2, 15, 1, 4, 10,
    8, 6, 10, 13, 7, 14, 15, 9, 5, 11, 4, 1, 12, 2, 3,
    3, 12, 6, 8, 10, 9, 7, 11, 14, 5, 13, 4, 2, 15, 1,
    2, 4, 8, 6, 9, 10, 11, 7, 12, 13, 5, 14, 3, 1, 15,
};

inline constexpr int square_17[289] = {
    1, 12, 4, 6, 7, 13, 14, 10, 16, 15, 11, 17, 9, 8, 5, 3, 2,
    14, 2, 1, 4, 5, 8, 17, 9, 10, 13, 12, 11, 16, 15, 7, 6, 3,
    4, 1, 3, 2, 12, 5, 8, 14, 9, 10, 13, 15, 17, 11, 16, 7, 6,
    6, 4, 2, 5, 1, 3, 9, 8, 11, 12, 10, 13, 14, 16, 15, 17, 7,
    7, 5, 15, 1, 4, 2, 3, 6, 8, 9, 17, 14, 10, 12, 11, 16, 13,
    17, 8, 5, 3, 2, 7, 1, 4, 6, 11, 14, 10, 15, 13, 9, 12, 16,
    16, 15, 8, 13, 3, 1, 6, 2, 4, 5, 7, 9, 12, 17, 14, 10, 11,
    15, 16, 12, 8, 6, 4, 2, 17, 1, 3, 5, 7, 11, 10, 13, 14, 9,
    12, 13, 17, 16, 8, 6, 4, 1, 14, 2, 3, 5, 7, 9, 10, 11, 15,
    11, 14, 13, 17, 15, 16, 5, 3, 2, 8, 1, 4, 6, 7, 12, 9, 10,
    10, 17, 14, 15, 16, 11, 7, 5, 3, 1, 9, 2, 4, 6, 8, 13, 12,
    13, 9, 10, 11, 17, 15, 16, 7, 5, 4, 2, 12, 1, 3, 6, 8, 14,
    9, 10, 11, 12, 14, 17, 15, 16, 7, 6, 4, 1, 13, 2, 3, 5, 8,
    8, 11, 16, 9, 10, 12, 13, 15, 17, 7, 6, 3, 2, 14, 1, 4, 5,
    5, 7, 9, 10, 13, 14, 12, 11, 15, 16, 8, 6, 3, 1, 17, 2, 4,
    3, 6, 7, 14, 11, 9, 10, 13, 12, 17, 16, 8, 5, 4, 2, 15, 1,
    2, 3, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 8, 5, 4, 1, 17,
};

inline constexpr int square_19[361] = {
    1, 19, 4, 6, 7, 16, 18, 11, 10, 12, 14, 13, 15, 17, 9, 8, 5, 3, 2,
    13, 2, 1, 3, 6, 8, 14, 12, 15, 11, 17, 18, 10, 19, 16, 9, 7, 5, 4,
    4, 1, 3, 2, 17, 6, 8, 10, 12, 13, 11, 19, 14, 15, 18, 16, 9, 7, 5,
    6, 3, 2, 5, 1, 4, 16, 7, 9, 10, 13, 11, 19, 12, 17, 15, 18, 14, 8,
    7, 6, 18, 1, 4, 2, 3, 5, 8, 9, 12, 14, 11, 10, 19, 13, 16, 17, 15,
    16, 8, 6, 4, 2, 7, 1, 3, 5, 19, 9, 10, 12, 11, 13, 17, 14, 15, 18,
    17, 18, 8, 19, 3, 1, 6, 2, 4, 5, 7, 9, 13, 16, 10, 14, 15, 11, 12,
    15, 17, 19, 7, 5, 3, 2, 9, 1, 4, 6, 8, 16, 13, 11, 10, 12, 18, 14,
    19, 12, 13, 9, 8, 5, 4, 1, 18, 2, 3, 6, 7, 14, 15, 11, 17, 16, 10,
    18, 15, 16, 17, 9, 19, 5, 4, 2, 8, 1, 3, 6, 7, 14, 12, 11, 10, 13,
    11, 14, 15, 16, 18, 9, 7, 6, 3, 1, 10, 2, 4, 5, 8, 19, 13, 12, 17,
    14, 16, 17, 15, 19, 18, 9, 8, 6, 3, 2, 12, 1, 4, 5, 7, 10, 13, 11,
    10, 11, 12, 14, 15, 13, 19, 18, 7, 6, 4, 1, 17, 2, 3, 5, 8, 9, 16,
    12, 13, 10, 11, 14, 17, 15, 19, 16, 7, 5, 4, 2, 18, 1, 3, 6, 8, 9,
    9, 10, 11, 13, 16, 14, 17, 15, 19, 18, 8, 5, 3, 1, 12, 2, 4, 6, 7,
    8, 9, 14, 12, 13, 15, 10, 17, 11, 16, 19, 7, 5, 3, 2, 18, 1, 4, 6,
    5, 7, 9, 10, 11, 12, 13, 16, 17, 14, 18, 15, 8, 6, 4, 1, 19, 2, 3,
    3, 5, 7, 18, 12, 10, 11, 14, 13, 17, 15, 16, 9, 8, 6, 4, 2, 19, 1,
    2, 4, 5, 8, 10, 11, 12, 13, 14, 15, 16, 17, 18, 9, 7, 6, 3, 1, 19,
};

inline constexpr int square_21[441] = {
    1, 17, 4, 21, 5, 8, 12, 13, 9, 11, 15, 14, 19, 10, 16, 18, 7, 6, 20, 3, 2,
    16, 2, 1, 4, 15, 6, 8, 14, 11, 10, 18, 21, 13, 17, 9, 12, 20, 7, 5, 19, 3,
    4, 1, 3, 2, 12, 16, 5, 8, 18, 13, 10, 11, 17, 14, 15, 9, 21, 19, 7, 6, 20,
    19, 4, 2, 5, 1, 3, 18, 11, 8, 12, 21, 10, 14, 16, 17, 20, 9, 13, 15, 7, 6,
    5, 14, 17, 1, 4, 2, 3, 16, 6, 8, 12, 19, 9, 20, 18, 15, 11, 10, 21, 13, 7,
    8, 6, 14, 3, 2, 7, 1, 4, 17, 5, 13, 18, 11, 9, 21, 19, 15, 12, 10, 20, 16,
    15, 8, 5, 20, 3, 1, 9, 2, 4, 19, 6, 7, 12, 11, 13, 21, 16, 18, 14, 10, 17,
    18, 13, 8, 16, 20, 4, 2, 6, 1, 3, 14, 5, 7, 21, 12, 10, 17, 15, 19, 11, 9,
    9, 19, 16, 8, 6, 18, 4, 1, 20, 2, 3, 12, 5, 7, 11, 17, 10, 21, 13, 14, 15,
    20, 10, 19, 17, 8, 5, 21, 3, 2, 16, 1, 4, 18, 6, 7, 13, 14, 9, 11, 15, 12,
    21, 18, 10, 19, 16, 20, 6, 17, 3, 1, 8, 2, 4, 15, 5, 7, 13, 14, 9, 12, 11,
    17, 16, 20, 10, 18, 19, 7, 5, 21, 4, 2, 15, 1, 3, 14, 6, 8, 11, 12, 9, 13,
    13, 12, 21, 18, 9, 14, 19, 7, 5, 20, 4, 1, 15, 2, 3, 11, 6, 8, 16, 17, 10,
    10, 21, 18, 15, 17, 9, 11, 20, 7, 6, 19, 3, 2, 13, 1, 4, 12, 5, 8, 16, 14,
    14, 9, 12, 11, 21, 17, 20, 15, 19, 7, 5, 13, 3, 1, 10, 2, 4, 16, 6, 8, 18,
    12, 15, 9, 14, 19, 11, 17, 10, 13, 21, 7, 6, 20, 4, 2, 16, 1, 3, 18, 5, 8,
    7, 11, 13, 9, 14, 15, 16, 21, 10, 17, 20, 8, 6, 12, 4, 1, 19, 2, 3, 18, 5,
    6, 7, 15, 13, 10, 21, 14, 18, 12, 9, 11, 16, 8, 5, 20, 3, 2, 17, 1, 4, 19,
    11, 5, 7, 12, 13, 10, 15, 19, 16, 18, 9, 20, 21, 8, 6, 14, 3, 1, 17, 2, 4,
    3, 20, 6, 7, 11, 13, 10, 12, 15, 14, 17, 9, 16, 19, 8, 5, 18, 4, 2, 21, 1,
    2, 3, 11, 6, 7, 12, 13, 9, 14, 15, 16, 17, 10, 18, 19, 8, 5, 20, 4, 1, 21,
};

inline constexpr int square_23[529] = {
    1, 17, 4, 6, 8, 9, 23, 21, 20, 12, 14, 16, 15, 18, 22, 13, 19, 11, 10, 7, 5, 3, 2,
    16, 2, 1, 3, 5, 8, 10, 19, 17, 20, 12, 13, 14, 15, 18, 23, 21, 22, 11, 9, 7, 6, 4,
    4, 1, 3, 2, 19, 5, 7, 10, 16, 13, 20, 12, 23, 14, 17, 18, 22, 21, 15, 11, 9, 8, 6,
    6, 3, 2, 5, 1, 4, 18, 7, 9, 11, 15, 14, 13, 12, 19, 16, 23, 20, 21, 17, 22, 10, 8,
    8, 5, 19, 1, 4, 2, 3, 6, 7, 10, 11, 17, 12, 13, 15, 21, 16, 18, 14, 23, 20, 22, 9,
    9, 8, 5, 4, 2, 7, 1, 3, 6, 22, 10, 11, 17, 16, 14, 19, 15, 23, 12, 18, 21, 20, 13,
    19, 10, 7, 20, 3, 1, 6, 2, 4, 5, 8, 9, 11, 23, 13, 15, 14, 17, 22, 16, 18, 21, 12,
    21, 23, 10, 7, 6, 3, 2, 9, 1, 4, 5, 8, 16, 11, 12, 17, 18, 15, 13, 20, 19, 14, 22,
    20, 22, 21, 9, 7, 6, 4, 1, 11, 2, 3, 5, 8, 10, 16, 12, 13, 14, 23, 15, 17, 18, 19,
    22, 20, 23, 11, 10, 21, 5, 4, 2, 8, 1, 3, 6, 7, 9, 14, 12, 16, 17, 13, 15, 19, 18,
    23, 21, 18, 22, 11, 10, 8, 5, 3, 1, 13, 2, 4, 6, 7, 9, 17, 12, 19, 14, 16, 15, 20,
    18, 19, 20, 21, 17, 11, 9, 8, 5, 3, 2, 23, 1, 4, 6, 7, 10, 13, 16, 22, 14, 12, 15,
    14, 15, 16, 23, 20, 19, 11, 22, 8, 6, 4, 1, 10, 2, 3, 5, 7, 9, 18, 12, 13, 17, 21,
    15, 16, 22, 17, 18, 23, 20, 11, 10, 7, 6, 4, 2, 19, 1, 3, 5, 8, 9, 21, 12, 13, 14,
    13, 14, 15, 18, 21, 22, 19, 20, 12, 9, 7, 6, 3, 1, 23, 2, 4, 5, 8, 10, 11, 16, 17,
    17, 12, 13, 14, 15, 18, 22, 23, 21, 19, 9, 7, 5, 3, 2, 20, 1, 4, 6, 8, 10, 11, 16,
    12, 13, 14, 19, 16, 17, 15, 18, 22, 23, 21, 10, 7, 5, 4, 1, 20, 2, 3, 6, 8, 9, 11,
    11, 18, 17, 16, 23, 20, 21, 12, 13, 14, 22, 15, 9, 8, 5, 4, 2, 19, 1, 3, 6, 7, 10,
    10, 11, 12, 13, 14, 16, 17, 15, 19, 18, 23, 22, 21, 9, 8, 6, 3, 1, 20, 2, 4, 5, 7,
    7, 9, 11, 15, 12, 13, 14, 16, 23, 21, 18, 20, 22, 17, 10, 8, 6, 3, 2, 19, 1, 4, 5,
    5, 7, 9, 12, 13, 14, 16, 17, 18, 15, 19, 21, 20, 22, 11, 10, 8, 6, 4, 1, 23, 2, 3,
    3, 6, 8, 10, 22, 15, 12, 13, 14, 17, 16, 19, 18, 21, 20, 11, 9, 7, 5, 4, 2, 23, 1,
    2, 4, 6, 8, 9, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 11, 10, 7, 5, 3, 1, 23,
};

inline constexpr int square_25[625] = {
    1, 18, 4, 6, 7, 14, 9, 12, 17, 13, 20, 22, 23, 15, 16, 24, 19, 21, 11, 10, 25, 8, 5, 3, 2,
    20, 2, 1, 4, 6, 8, 23, 10, 12, 18, 21, 14, 17, 25, 15, 13, 22, 16, 24, 11, 9, 19, 7, 5, 3,
    4, 1, 3, 2, 17, 6, 8, 23, 10, 11, 19, 15, 20, 13, 14, 25, 16, 22, 18, 21, 12, 9, 24, 7, 5,
    6, 4, 2, 5, 1, 3, 16, 8, 19, 10, 12, 13, 15, 23, 18, 21, 25, 17, 14, 20, 24, 11, 9, 22, 7,
    7, 6, 16, 1, 4, 2, 3, 5, 8, 21, 10, 11, 13, 19, 17, 15, 18, 20, 23, 22, 14, 25, 12, 9, 24,
    22, 8, 6, 3, 2, 7, 1, 4, 5, 15, 18, 10, 11, 16, 19, 14, 17, 25, 13, 23, 20, 24, 21, 12, 9,
    9, 21, 8, 22, 3, 1, 6, 2, 4, 5, 7, 17, 10, 12, 25, 20, 24, 14, 16, 13, 18, 15, 19, 23, 11,
    12, 10, 20, 8, 5, 4, 2, 9, 1, 3, 6, 7, 14, 24, 11, 16, 13, 15, 21, 18, 17, 23, 25, 19, 22,
    25, 12, 10, 16, 8, 5, 4, 1, 11, 2, 3, 6, 7, 14, 9, 17, 21, 18, 20, 19, 13, 22, 23, 24, 15,
    17, 25, 11, 10, 21, 24, 5, 3, 2, 8, 1, 4, 6, 7, 22, 9, 12, 13, 15, 16, 19, 14, 20, 18, 23,
    16, 23, 24, 12, 10, 25, 7, 6, 3, 1, 14, 2, 4, 5, 8, 19, 9, 11, 17, 15, 22, 20, 18, 21, 13,
    24, 19, 22, 23, 11, 10, 25, 7, 6, 4, 2, 21, 1, 3, 5, 8, 15, 9, 12, 17, 16, 18, 13, 20, 14,
    23, 24, 25, 20, 22, 11, 10, 21, 7, 6, 4, 1, 16, 2, 3, 5, 8, 19, 9, 12, 15, 17, 14, 13, 18,
    15, 22, 21, 19, 18, 23, 12, 16, 24, 7, 5, 3, 2, 10, 1, 4, 6, 8, 25, 9, 11, 13, 17, 14, 20,
    21, 20, 19, 25, 23, 18, 22, 11, 9, 24, 8, 5, 3, 1, 13, 2, 4, 6, 7, 14, 10, 12, 15, 17, 16,
    14, 16, 23, 18, 19, 20, 24, 25, 22, 9, 13, 8, 5, 4, 2, 12, 1, 3, 6, 7, 21, 10, 11, 15, 17,
    18, 13, 17, 15, 24, 21, 20, 22, 25, 12, 9, 23, 8, 6, 4, 1, 14, 2, 3, 5, 7, 16, 10, 11, 19,
    19, 14, 15, 17, 20, 22, 21, 13, 18, 23, 11, 9, 25, 8, 6, 3, 2, 24, 1, 4, 5, 7, 16, 10, 12,
    11, 17, 18, 21, 25, 15, 14, 24, 13, 20, 23, 12, 9, 22, 7, 6, 3, 1, 19, 2, 4, 5, 8, 16, 10,
    10, 11, 14, 13, 15, 17, 18, 20, 16, 19, 22, 24, 12, 9, 23, 7, 5, 4, 2, 25, 1, 3, 6, 8, 21,
    13, 9, 12, 14, 16, 19, 15, 17, 21, 22, 25, 20, 24, 11, 10, 18, 7, 5, 4, 1, 23, 2, 3, 6, 8,
    8, 15, 9, 11, 14, 13, 19, 18, 23, 25, 24, 16, 22, 17, 12, 10, 20, 7, 5, 3, 2, 21, 1, 4, 6,
    5, 7, 13, 9, 12, 16, 17, 19, 20, 14, 15, 25, 21, 18, 24, 11, 10, 23, 8, 6, 3, 1, 22, 2, 4,
    3, 5, 7, 24, 9, 12, 13, 15, 14, 17, 16, 19, 18, 21, 20, 23, 11, 10, 22, 8, 6, 4, 2, 25, 1,
    2, 3, 5, 7, 13, 9, 11, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 12, 10, 24, 8, 6, 4, 1, 25,
};

inline constexpr int square_27[729] = {
    1, 19, 4, 18, 6, 8, 17, 9, 12, 15, 20, 21, 22, 23, 24, 25, 27, 13, 26, 11, 10, 16, 7, 5, 14, 3, 2,
    22, 2, 1, 3, 25, 5, 8, 23, 9, 12, 24, 14, 17, 27, 20, 19, 26, 18, 13, 15, 11, 10, 21, 7, 6, 16, 4,
    4, 1, 3, 2, 27, 24, 6, 7, 18, 9, 12, 25, 14, 16, 17, 20, 22, 15, 21, 13, 26, 11, 10, 23, 8, 5, 19,
    20, 3, 2, 5, 1, 4, 22, 21, 7, 14, 9, 11, 15, 13, 25, 26, 17, 23, 16, 18, 27, 24, 12, 10, 19, 8, 6,
    6, 18, 25, 1, 4, 2, 3, 17, 5, 8, 19, 9, 11, 22, 13, 14, 15, 16, 24, 23, 21, 27, 26, 12, 10, 20, 7,
    8, 5, 22, 4, 2, 7, 1, 3, 20, 6, 27, 15, 9, 11, 14, 13, 18, 21, 23, 17, 19, 25, 16, 24, 12, 10, 26,
    23, 8, 6, 26, 3, 1, 9, 2, 4, 21, 5, 7, 24, 14, 12, 15, 16, 17, 18, 27, 20, 22, 19, 13, 25, 11, 10,
    9, 22, 7, 20, 26, 3, 2, 6, 1, 4, 23, 5, 8, 24, 10, 12, 25, 14, 15, 19, 16, 21, 18, 27, 13, 17, 11,
    12, 9, 24, 7, 5, 26, 4, 1, 11, 2, 3, 17, 6, 8, 15, 10, 14, 19, 20, 22, 18, 23, 27, 21, 16, 13, 25,
    26, 12, 9, 19, 8, 6, 27, 4, 2, 13, 1, 3, 21, 5, 7, 18, 10, 11, 22, 14, 15, 17, 24, 16, 20, 25, 23,
    21, 23, 12, 9, 18, 25, 5, 27, 3, 1, 8, 2, 4, 26, 6, 7, 19, 10, 11, 16, 13, 14, 20, 22, 17, 24, 15,
    25, 26, 21, 11, 9, 23, 7, 5, 17, 3, 2, 27, 1, 4, 16, 6, 8, 20, 10, 12, 22, 13, 15, 18, 24, 19, 14,
    24, 21, 18, 23, 11, 9, 25, 8, 6, 20, 4, 1, 26, 2, 3, 16, 5, 7, 27, 10, 12, 15, 13, 19, 22, 14, 17,
    27, 25, 26, 13, 21, 11, 19, 18, 8, 5, 22, 4, 2, 10, 1, 3, 24, 6, 7, 20, 9, 12, 14, 17, 15, 23, 16,
    16, 24, 20, 25, 13, 19, 12, 10, 22, 7, 6, 23, 3, 1, 26, 2, 4, 27, 5, 8, 17, 9, 11, 14, 18, 15, 21,
    19, 15, 23, 16, 17, 13, 26, 12, 10, 18, 7, 6, 25, 3, 2, 27, 1, 4, 14, 5, 8, 20, 9, 11, 21, 22, 24,
    18, 16, 27, 22, 19, 20, 23, 25, 24, 10, 14, 8, 5, 15, 4, 1, 12, 2, 3, 26, 6, 7, 17, 9, 11, 21, 13,
    13, 17, 19, 21, 22, 16, 24, 20, 23, 11, 10, 26, 7, 6, 27, 4, 2, 25, 1, 3, 14, 5, 8, 15, 9, 12, 18,
    15, 13, 16, 14, 23, 18, 20, 22, 21, 25, 11, 10, 27, 7, 5, 24, 3, 1, 17, 2, 4, 19, 6, 8, 26, 9, 12,
    11, 20, 13, 15, 24, 27, 16, 19, 14, 23, 26, 12, 10, 17, 8, 5, 21, 3, 2, 25, 1, 4, 22, 6, 7, 18, 9,
    10, 11, 15, 17, 14, 21, 18, 16, 26, 27, 13, 24, 12, 9, 19, 8, 6, 22, 4, 1, 23, 2, 3, 25, 5, 7, 20,
    14, 10, 11, 27, 20, 22, 21, 24, 25, 26, 15, 13, 16, 12, 9, 17, 7, 5, 19, 4, 2, 18, 1, 3, 23, 6, 8,
    7, 14, 10, 12, 16, 17, 15, 26, 19, 24, 25, 22, 13, 18, 11, 9, 20, 8, 6, 21, 3, 1, 23, 2, 4, 27, 5,
    5, 7, 17, 10, 12, 14, 13, 15, 27, 19, 21, 16, 23, 25, 18, 11, 9, 26, 8, 6, 24, 3, 2, 20, 1, 4, 22,
    17, 6, 8, 24, 10, 12, 14, 13, 15, 22, 16, 20, 18, 19, 23, 21, 11, 9, 25, 7, 5, 26, 4, 1, 27, 2, 3,
    3, 27, 5, 8, 15, 10, 11, 14, 13, 16, 17, 18, 19, 20, 21, 22, 23, 12, 9, 24, 7, 6, 25, 4, 2, 26, 1,
    2, 4, 14, 6, 7, 15, 10, 11, 16, 17, 18, 19, 20, 21, 22, 23, 13, 24, 12, 9, 25, 8, 5, 26, 3, 1, 27,
};

inline constexpr int square_29[841] = {
    1, 18, 4, 6, 8, 10, 12, 13, 17, 20, 22, 15, 23, 16, 25, 26, 21, 27, 24, 28, 19, 29, 14, 11, 9, 7, 5, 3, 2,
    29, 2, 1, 4, 5, 8, 10, 11, 13, 19, 16, 23, 22, 15, 18, 20, 17, 24, 21, 25, 26, 27, 28, 14, 12, 9, 7, 6, 3,
    4, 1, 3, 2, 22, 5, 7, 10, 12, 13, 20, 25, 16, 24, 23, 15, 18, 21, 17, 26, 27, 28, 29, 19, 14, 11, 9, 8, 6,
    6, 4, 2, 5, 1, 3, 22, 8, 9, 12, 14, 28, 17, 18, 19, 25, 27, 15, 20, 16, 23, 24, 26, 29, 21, 13, 11, 10, 7,
    8, 5, 21, 1, 4, 2, 3, 6, 7, 9, 11, 14, 15, 25, 17, 18, 20, 23, 22, 24, 29, 26, 27, 28, 16, 19, 13, 12, 10,
    10, 8, 5, 3, 2, 7, 1, 4, 6, 26, 9, 12, 14, 17, 16, 19, 25, 20, 15, 18, 22, 23, 21, 24, 28, 29, 27, 13, 11,
    12, 10, 7, 29, 3, 1, 6, 2, 4, 5, 8, 9, 11, 14, 15, 16, 19, 18, 27, 17, 21, 20, 22, 23, 25, 24, 28, 26, 13,
    13, 11, 10, 8, 6, 4, 2, 9, 1, 3, 5, 7, 24, 12, 14, 17, 28, 16, 18, 21, 15, 25, 20, 22, 19, 23, 26, 29, 27,
    24, 13, 12, 9, 7, 6, 4, 1, 11, 2, 3, 5, 8, 10, 20, 14, 16, 17, 23, 15, 25, 18, 19, 21, 26, 22, 29, 27, 28,
    21, 29, 13, 12, 9, 25, 5, 3, 2, 8, 1, 4, 6, 7, 10, 11, 14, 22, 19, 20, 24, 15, 16, 27, 17, 28, 18, 23, 26,
    26, 28, 29, 14, 11, 9, 8, 5, 3, 1, 13, 2, 4, 6, 7, 10, 12, 19, 16, 22, 18, 17, 24, 20, 23, 27, 21, 15, 25,
    28, 27, 20, 24, 14, 12, 9, 7, 5, 4, 2, 29, 1, 3, 6, 8, 10, 11, 13, 19, 16, 21, 18, 26, 22, 17, 23, 25, 15,
    27, 20, 24, 25, 26, 14, 11, 28, 8, 6, 4, 1, 10, 2, 3, 5, 7, 9, 12, 13, 17, 16, 15, 18, 29, 21, 19, 22, 23,
    25, 23, 26, 27, 28, 29, 14, 12, 10, 7, 6, 3, 2, 22, 1, 4, 5, 8, 9, 11, 13, 19, 17, 15, 20, 16, 24, 21, 18,
    23, 22, 28, 19, 20, 27, 26, 14, 29, 10, 7, 6, 3, 1, 12, 2, 4, 5, 8, 9, 11, 13, 25, 16, 15, 18, 17, 24, 21,
    22, 24, 27, 23, 29, 26, 28, 19, 14, 11, 10, 8, 5, 4, 2, 21, 1, 3, 6, 7, 9, 12, 13, 17, 18, 25, 15, 20, 16,
    17, 21, 25, 28, 18, 22, 23, 29, 26, 14, 12, 10, 7, 5, 4, 1, 15, 2, 3, 6, 8, 9, 11, 13, 27, 20, 16, 19, 24,
    18, 25, 19, 20, 23, 24, 29, 26, 27, 21, 28, 11, 9, 8, 5, 3, 2, 14, 1, 4, 6, 7, 10, 12, 13, 15, 22, 16, 17,
    16, 17, 22, 26, 21, 23, 25, 24, 28, 27, 15, 13, 12, 9, 8, 6, 3, 1, 29, 2, 4, 5, 7, 10, 11, 14, 20, 18, 19,
    19, 26, 18, 21, 25, 28, 24, 27, 22, 15, 29, 16, 13, 11, 9, 7, 6, 4, 2, 23, 1, 3, 5, 8, 10, 12, 14, 17, 20,
    15, 16, 23, 18, 24, 19, 17, 21, 25, 29, 26, 27, 28, 13, 11, 9, 8, 6, 4, 1, 20, 2, 3, 5, 7, 10, 12, 14, 22,
    20, 19, 15, 16, 17, 21, 18, 25, 23, 28, 27, 24, 26, 29, 13, 12, 9, 7, 5, 3, 2, 22, 1, 4, 6, 8, 10, 11, 14,
    14, 15, 16, 17, 19, 20, 21, 22, 24, 18, 25, 26, 29, 27, 28, 13, 11, 10, 7, 5, 3, 1, 23, 2, 4, 6, 8, 9, 12,
    11, 14, 17, 22, 15, 16, 19, 20, 18, 23, 24, 21, 27, 26, 29, 28, 13, 12, 10, 8, 5, 4, 2, 25, 1, 3, 6, 7, 9,
    9, 12, 14, 15, 16, 17, 20, 23, 19, 25, 21, 22, 18, 28, 26, 27, 29, 13, 11, 10, 7, 6, 4, 1, 24, 2, 3, 5, 8,
    7, 9, 11, 13, 27, 18, 15, 16, 21, 22, 19, 17, 25, 20, 24, 29, 23, 28, 14, 12, 10, 8, 6, 3, 2, 26, 1, 4, 5,
    5, 7, 9, 11, 13, 15, 16, 17, 20, 24, 23, 18, 21, 19, 27, 22, 26, 29, 28, 14, 12, 10, 8, 6, 3, 1, 25, 2, 4,
    3, 6, 8, 10, 12, 13, 27, 18, 15, 16, 17, 20, 19, 23, 21, 24, 22, 26, 25, 29, 14, 11, 9, 7, 5, 4, 2, 28, 1,
    2, 3, 6, 7, 10, 11, 13, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 14, 12, 9, 8, 5, 4, 1, 29,
};

inline constexpr int square_31[961] = {
    1, 28, 4, 6, 8, 9, 11, 13, 21, 24, 25, 31, 17, 20, 18, 16, 19, 22, 23, 26, 27, 29, 30, 15, 14, 12, 10, 7, 5, 3, 2,
    26, 2, 1, 3, 6, 8, 9, 12, 14, 28, 17, 24, 31, 16, 20, 21, 22, 30, 18, 29, 25, 23, 27, 19, 15, 13, 11, 10, 7, 5, 4,
    4, 1, 3, 2, 28, 6, 7, 10, 12, 13, 29, 30, 16, 17, 22, 20, 21, 18, 25, 19, 26, 24, 23, 31, 27, 15, 14, 11, 9, 8, 5,
    6, 3, 2, 5, 1, 4, 27, 7, 10, 11, 14, 23, 18, 19, 16, 25, 17, 31, 29, 20, 24, 28, 22, 30, 26, 21, 15, 13, 12, 9, 8,
    8, 6, 27, 1, 4, 2, 3, 5, 7, 10, 12, 14, 15, 18, 17, 19, 20, 23, 26, 22, 28, 25, 21, 29, 16, 24, 30, 31, 13, 11, 9,
    9, 8, 6, 4, 2, 7, 1, 3, 5, 29, 10, 11, 13, 15, 19, 17, 24, 16, 20, 25, 23, 18, 26, 22, 31, 27, 21, 28, 30, 14, 12,
    11, 9, 7, 23, 3, 1, 6, 2, 4, 5, 8, 10, 12, 14, 15, 30, 16, 20, 21, 18, 19, 22, 24, 28, 25, 31, 26, 17, 27, 29, 13,
    13, 12, 10, 7, 5, 3, 2, 9, 1, 4, 6, 8, 19, 11, 14, 15, 18, 21, 17, 30, 22, 26, 25, 24, 23, 20, 27, 29, 31, 16, 28,
    25, 14, 12, 10, 7, 5, 4, 1, 11, 2, 3, 6, 8, 9, 26, 13, 15, 19, 16, 17, 21, 20, 31, 27, 28, 18, 23, 22, 24, 30, 29,
    24, 31, 13, 11, 10, 26, 5, 4, 2, 8, 1, 3, 6, 7, 9, 12, 14, 15, 22, 16, 17, 27, 29, 21, 20, 30, 18, 25, 19, 28, 23,
    30, 29, 31, 14, 12, 10, 8, 6, 3, 1, 13, 2, 4, 5, 7, 9, 11, 17, 15, 23, 16, 21, 20, 18, 19, 26, 22, 27, 28, 25, 24,
    27, 30, 28, 31, 14, 11, 10, 8, 6, 3, 2, 15, 1, 4, 5, 7, 9, 12, 13, 21, 18, 16, 19, 20, 29, 22, 25, 23, 26, 24, 17,
    23, 27, 30, 29, 15, 13, 12, 31, 8, 6, 4, 1, 10, 2, 3, 5, 7, 9, 11, 14, 20, 19, 16, 25, 17, 28, 24, 26, 21, 22, 18,
    29, 26, 25, 30, 31, 15, 14, 11, 9, 7, 5, 4, 2, 28, 1, 3, 6, 8, 10, 12, 13, 17, 18, 16, 21, 19, 20, 24, 23, 27, 22,
    28, 24, 29, 27, 26, 30, 15, 14, 31, 9, 7, 5, 3, 1, 12, 2, 4, 6, 8, 10, 11, 13, 17, 23, 22, 25, 19, 21, 18, 20, 16,
    31, 21, 22, 26, 29, 27, 30, 15, 13, 12, 9, 7, 5, 3, 2, 18, 1, 4, 6, 8, 10, 11, 14, 17, 24, 16, 28, 19, 20, 23, 25,
    22, 25, 24, 28, 27, 31, 21, 29, 15, 14, 11, 9, 7, 6, 4, 1, 30, 2, 3, 5, 8, 10, 12, 13, 18, 23, 17, 20, 16, 26, 19,
    21, 23, 26, 24, 25, 28, 31, 27, 29, 15, 30, 12, 9, 8, 6, 4, 2, 14, 1, 3, 5, 7, 10, 11, 13, 17, 16, 18, 22, 19, 20,
    18, 22, 20, 21, 30, 24, 26, 23, 28, 31, 15, 13, 11, 10, 8, 6, 3, 1, 19, 2, 4, 5, 7, 9, 12, 14, 29, 16, 25, 17, 27,
    19, 20, 21, 22, 23, 29, 25, 28, 30, 27, 31, 16, 14, 12, 10, 8, 5, 3, 2, 24, 1, 4, 6, 7, 9, 11, 13, 15, 17, 18, 26,
    17, 18, 19, 20, 22, 25, 23, 24, 27, 26, 16, 29, 28, 13, 11, 10, 8, 5, 4, 1, 31, 2, 3, 6, 7, 9, 12, 14, 15, 21, 30,
    20, 16, 17, 18, 24, 23, 28, 30, 26, 19, 22, 25, 27, 29, 13, 11, 10, 7, 5, 4, 2, 31, 1, 3, 6, 8, 9, 12, 14, 15, 21,
    16, 17, 18, 19, 20, 22, 24, 26, 25, 23, 21, 27, 29, 30, 31, 14, 12, 10, 7, 6, 3, 1, 28, 2, 4, 5, 8, 9, 11, 13, 15,
    15, 19, 23, 16, 17, 18, 20, 21, 22, 30, 27, 28, 24, 31, 25, 29, 13, 11, 9, 7, 6, 3, 2, 26, 1, 4, 5, 8, 10, 12, 14,
    14, 15, 16, 17, 19, 20, 22, 25, 24, 21, 28, 18, 26, 23, 27, 31, 29, 13, 12, 9, 7, 6, 4, 1, 30, 2, 3, 5, 8, 10, 11,
    12, 13, 15, 25, 21, 19, 18, 22, 23, 16, 26, 17, 20, 24, 30, 27, 31, 28, 14, 11, 9, 8, 5, 4, 2, 29, 1, 3, 6, 7, 10,
    10, 11, 14, 15, 16, 17, 19, 20, 18, 22, 23, 21, 30, 25, 28, 26, 27, 29, 24, 13, 12, 9, 8, 5, 3, 1, 31, 2, 4, 6, 7,
    7, 10, 11, 13, 18, 21, 16, 17, 19, 20, 24, 22, 25, 26, 29, 28, 23, 27, 31, 15, 14, 12, 9, 8, 5, 3, 2, 30, 1, 4, 6,
    5, 7, 9, 12, 13, 16, 17, 19, 20, 25, 18, 26, 23, 27, 21, 22, 28, 24, 30, 31, 15, 14, 11, 10, 8, 6, 4, 1, 29, 2, 3,
    3, 5, 8, 9, 11, 14, 29, 18, 16, 17, 20, 19, 22, 21, 24, 23, 26, 25, 28, 27, 30, 15, 13, 12, 10, 7, 6, 4, 2, 31, 1,
    2, 4, 5, 8, 9, 12, 13, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 15, 14, 11, 10, 7, 6, 3, 1, 31,
};

// Flat row-major table for odd n, or nullptr when no table is baked.
inline const int* square_for(int n) {
    switch (n) {
    case 3: return square_3;
    case 5: return square_5;
    case 7: return square_7;
    case 9: return square_9;
    case 11: return square_11;
    case 13: return square_13;
    case 15: return square_15;
    case 17: return square_17;
    case 19: return square_19;
    case 21: return square_21;
    case 23: return square_23;
    case 25: return square_25;
    case 27: return square_27;
    case 29: return square_29;
    case 31: return square_31;
    default: return nullptr;
    }
}

}  // namespace kex::baked

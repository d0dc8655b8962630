#pragma once

// Embedded reference data: the GF(2^3) mod x^3+x+1 operation tables as
// printed in the source tables this toolkit reproduces, the 4x4 CNOT matrix,
// and the complement-pair table. The printed multiplication block carries two
// typographical errors (it is not commutative at two cells); they are kept
// verbatim here and allowlisted below so the diff against computed arithmetic
// is itself checkable.

#include <array>
#include <cstdint>

namespace qowp::ref {

// Cell values are coefficient words: x^2+x+1 = 7, x^2+x = 6, ..., 1 = 1, 0 = 0.
inline constexpr std::array<std::array<std::uint8_t, 8>, 8> kPrintedMulTable{{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 3, 4, 5, 6, 7},
    {0, 2, 4, 6, 3, 1, 7, 5},
    {0, 3, 6, 5, 7, 4, 1, 2},
    {0, 4, 5, 7, 6, 2, 5, 1},  // (4,2) printed x^2+1; arithmetic gives x+1
    {0, 5, 1, 4, 2, 7, 3, 6},
    {0, 6, 7, 1, 5, 3, 2, 4},
    {0, 7, 5, 2, 1, 5, 4, 3},  // (7,5) printed x^2+1; arithmetic gives x^2+x
}};

inline constexpr std::array<std::array<std::uint8_t, 8>, 8> kPrintedAddTable{{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
}};

/// A printed cell that disagrees with computed field arithmetic. The mirror
/// cell (col, row) prints the computed value, which is the commutativity
/// witness justifying the allowlisting.
struct TypoCell {
    std::uint8_t row;
    std::uint8_t col;
    std::uint8_t printed;
    std::uint8_t computed;
};

inline constexpr std::array<TypoCell, 2> kKnownMulTypos{{
    {4, 2, 5, 3},  // 100 x 010: printed x^2+1, computed x+1
    {7, 5, 5, 6},  // 111 x 101: printed x^2+1, computed x^2+x
}};

inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kCnotMatrix{{
    {1, 0, 0, 0},
    {0, 1, 0, 0},
    {0, 0, 0, 1},
    {0, 0, 1, 0},
}};

struct PairRowRef {
    const char* alice_bits;
    const char* alice_poly;
    const char* bob_bits;
    const char* bob_poly;
};

inline constexpr std::array<PairRowRef, 8> kPairTable{{
    {"111", "x^2+x+1", "000", "0"},
    {"110", "x^2+x", "001", "1"},
    {"101", "x^2+1", "010", "x"},
    {"100", "x^2", "011", "x+1"},
    {"011", "x+1", "100", "x^2"},
    {"010", "x", "101", "x^2+1"},
    {"001", "1", "110", "x^2+x"},
    {"000", "0", "111", "x^2+x+1"},
}};

}  // namespace qowp::ref

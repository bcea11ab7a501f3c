#pragma once

#include <string_view>

namespace cubecycle::detail {

// Curated cycle tables for the order-32 SSQ and order-64 BSQ graphs: one row
// per target length, each row a cycle through vertex 000000 given as a
// space-separated label list. Rows are validated at asset-build time and
// replaced by a searched cycle when they fail validation.
struct BaseCycleRow {
    int length;
    std::string_view vertices;
};

inline constexpr BaseCycleRow kSsq6CycleRows[] = {
    {3,
     "000000 001000 000100"},
    {4,
     "000000 000001 000011 000010"},
    {5,
     "000000 000100 000101 001001 001000"},
    {6,
     "000000 000001 000011 000111 000110 000010"},
    {7,
     "000000 000100 000101 000111 001011 001001 001000"},
    {8,
     "000000 000010 000011 000001 000101 000111 000110 000100"},
    {9,
     "000000 000100 000101 000111 000110 001010 001011 001001 "
     "001000"},
    {10,
     "000000 000010 000011 000001 000101 000111 001011 001010 "
     "000110 000100"},
    {11,
     "000000 000100 000101 000111 000110 001010 001110 001111 "
     "001011 001001 001000"},
    {12,
     "000000 000010 000011 000001 000101 000111 001011 001001 "
     "001000 001010 000110 000100"},
    {13,
     "000000 000100 000101 000111 000110 001010 001110 001100 "
     "001101 001111 001011 001001 001000"},
    {14,
     "000000 000100 000110 001010 001000 001100 001101 001001 "
     "001011 000111 000101 000001 000011 000010"},
    {15,
     "000000 000100 000101 000111 000110 001010 001110 001100 "
     "110000 110001 001101 001111 001011 001001 001000"},
    {16,
     "000000 000100 000110 001010 001000 001100 001110 001111 "
     "001101 001001 001011 000111 000101 000001 000011 000010"},
    {17,
     "000000 000100 000101 000111 000110 001010 001110 001100 "
     "110000 110010 110011 110001 001101 001111 001011 001001 "
     "001000"},
    {18,
     "000000 000100 000110 001010 001000 001100 001110 110010 "
     "110011 001111 001101 001001 001011 000111 000101 000001 "
     "000011 000010"},
    {19,
     "000000 000100 000101 000111 000110 001010 001110 001100 "
     "110000 110010 110110 110111 110011 110001 001101 001111 "
     "001011 001001 001000"},
    {20,
     "000000 000100 000110 001010 001000 001100 001110 110010 "
     "110000 110001 110011 001111 001101 001001 001011 000111 "
     "000101 000001 000011 000010"},
    {21,
     "000000 000100 000101 000111 000110 001010 001110 001100 "
     "110000 110010 110110 110100 110101 110111 110011 110001 "
     "001101 001111 001011 001001 001000"},
    {22,
     "000000 000100 000110 001010 001000 001100 001110 110010 "
     "110000 110100 110101 110001 110011 001111 001101 001001 "
     "001011 000111 000101 000001 000011 000010"},
    {23,
     "000000 000100 000101 000111 000110 001010 001110 001100 "
     "110000 110010 110110 110100 111000 111001 110101 110111 "
     "110011 110001 001101 001111 001011 001001 001000"},
    {24,
     "000000 000100 000110 001010 001000 001100 001110 110010 "
     "110000 110100 110110 110111 110101 110001 110011 001111 "
     "001101 001001 001011 000111 000101 000001 000011 000010"},
    {25,
     "000000 000100 000101 000111 000110 001010 001110 001100 "
     "110000 110010 110110 110100 111000 111010 111011 111001 "
     "110101 110111 110011 110001 001101 001111 001011 001001 "
     "001000"},
    {26,
     "000000 000100 000110 001010 001000 001100 001110 110010 "
     "110000 110100 110110 111010 111011 110111 110101 110001 "
     "110011 001111 001101 001001 001011 000111 000101 000001 "
     "000011 000010"},
    {27,
     "000000 000100 000101 000111 000110 001010 001110 001100 "
     "110000 110010 110110 110100 111000 111010 111110 111111 "
     "111011 111001 110101 110111 110011 110001 001101 001111 "
     "001011 001001 001000"},
    {28,
     "000000 000100 000110 001010 001000 001100 001110 110010 "
     "110000 110100 110110 111010 111000 111001 111011 110111 "
     "110101 110001 110011 001111 001101 001001 001011 000111 "
     "000101 000001 000011 000010"},
    {29,
     "000000 000100 000101 000111 000110 001010 001110 001100 "
     "110000 110010 110110 110100 111000 111010 111110 111100 "
     "111101 111111 111011 111001 110101 110111 110011 110001 "
     "001101 001111 001011 001001 001000"},
    {30,
     "000000 000100 000110 001010 001000 001100 001110 110010 "
     "110000 110100 110110 111010 111000 111100 111101 111001 "
     "111011 110111 110101 110001 110011 001111 001101 001001 "
     "001011 000111 000101 000001 000011 000010"},
    {31,
     "000000 000100 000101 000111 000110 001010 001110 001100 "
     "110000 110010 110110 110100 111000 111010 111110 111100 "
     "111101 000001 000011 111111 111011 111001 110101 110111 "
     "110011 110001 001101 001111 001011 001001 001000"},
    {32,
     "000000 000100 000110 001010 001000 001100 001110 110010 "
     "110000 110100 110110 111010 111000 111100 111110 111111 "
     "111101 111001 111011 110111 110101 110001 110011 001111 "
     "001101 001001 001011 000111 000101 000001 000011 000010"},
};

inline constexpr BaseCycleRow kBsq6CycleRows[] = {
    {4,
     "000000 000001 000011 000010"},
    {6,
     "000000 000001 000011 010111 010110 000010"},
    {8,
     "000000 000001 000011 010111 010101 010100 010110 000010"},
    {10,
     "000000 000001 000011 010111 010101 100101 100100 010100 "
     "010110 000010"},
    {12,
     "000000 000001 000011 010111 010101 100101 100111 100110 "
     "100100 010100 010110 000010"},
    {14,
     "000000 000001 000011 010111 010101 100101 100111 110111 "
     "110110 100110 100100 010100 010110 000010"},
    {16,
     "000000 000001 000011 010111 010101 100101 100111 110111 "
     "110101 110100 110110 100110 100100 010100 010110 000010"},
    {18,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001100 110000 110010 100010 100000 010000 "
     "010010 000010"},
    {20,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 001110 001100 110000 110010 100010 "
     "100000 010000 010010 000010"},
    {22,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011110 001110 001100 110000 "
     "110010 100010 100000 010000 010010 000010"},
    {24,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 011100 011110 001110 "
     "001100 110000 110010 100010 100000 010000 010010 000010"},
    {26,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101100 011100 "
     "011110 001110 001100 110000 110010 100010 100000 010000 "
     "010010 000010"},
    {28,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 101110 "
     "101100 011100 011110 001110 001100 110000 110010 100010 "
     "100000 010000 010010 000010"},
    {30,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111110 101110 101100 011100 011110 001110 001100 110000 "
     "110010 100010 100000 010000 010010 000010"},
    {32,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 111100 111110 101110 101100 011100 011110 001110 "
     "001100 110000 110010 100010 100000 010000 010010 000010"},
    {34,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001000 111100 111110 101110 101100 011100 "
     "011110 001110 001100 110000 110010 100010 100000 010000 "
     "010010 000010"},
    {36,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 001010 001000 111100 111110 101110 "
     "101100 011100 011110 001110 001100 110000 110010 100010 "
     "100000 010000 010010 000010"},
    {38,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011010 001010 001000 111100 "
     "111110 101110 101100 011100 011110 001110 001100 110000 "
     "110010 100010 100000 010000 010010 000010"},
    {40,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 011000 011010 001010 "
     "001000 111100 111110 101110 101100 011100 011110 001110 "
     "001100 110000 110010 100010 100000 010000 010010 000010"},
    {42,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101000 011000 "
     "011010 001010 001000 111100 111110 101110 101100 011100 "
     "011110 001110 001100 110000 110010 100010 100000 010000 "
     "010010 000010"},
    {44,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 101010 "
     "101000 011000 011010 001010 001000 111100 111110 101110 "
     "101100 011100 011110 001110 001100 110000 110010 100010 "
     "100000 010000 010010 000010"},
    {46,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 111011 "
     "111010 101010 101000 011000 011010 001010 001000 111100 "
     "111110 101110 101100 011100 011110 001110 001100 110000 "
     "110010 100010 100000 010000 010010 000010"},
    {48,
     "000000 000001 000011 010011 010011 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 111011 "
     "111001 111000 111010 101010 101000 011000 011010 001010 "
     "001000 111100 111110 101110 101100 011100 011110 001110 "
     "001100 110000 110010 100010 100000 010000 010010 000010"},
    {50,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 111011 "
     "111001 000101 000100 111000 111010 101010 101000 011000 "
     "011010 001010 001000 111100 111110 101110 101100 011100 "
     "011110 001110 001100 110000 110010 100010 100000 010000 "
     "010010 000010"},
    {52,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 111011 "
     "111001 000101 000111 000110 000100 111000 111010 101010 "
     "101000 011000 011010 001010 001000 111100 111110 101110 "
     "101100 011100 011110 001110 001100 100000 100010 100010 "
     "100000 010000 010010 000010"},
    {54,
     "000000 000001 000011 010011 011101 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 111011 "
     "111001 000101 000111 010111 010110 000110 000100 111000 "
     "111010 101010 101000 011000 011010 001010 001000 111100 "
     "111110 101110 101100 011100 011110 001110 001100 110000 "
     "110010 100010 100000 010000 010010 000010"},
    {56,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 111011 "
     "111001 000101 000111 010111 010101 010100 010110 000110 "
     "000100 111000 111010 101010 101000 011000 011010 001010 "
     "001000 111100 111110 101110 101100 011100 011110 001110 "
     "001100 110000 110010 100010 100000 010000 010010 000010"},
    {58,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 111011 "
     "111001 000101 000111 010111 010101 100101 100100 010100 "
     "010110 000110 000100 111000 111010 101010 101000 011000 "
     "011010 001010 001000 111100 111110 101110 101100 011100 "
     "011110 001110 001100 110000 110010 100010 100000 010000 "
     "010010 000010"},
    {60,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 111011 "
     "111001 000101 000111 010111 010101 100101 100111 100110 "
     "100100 010100 010110 000110 000100 111000 111010 101010 "
     "101000 011000 011010 001010 001000 111100 111110 101110 "
     "101100 011100 011110 001110 001100 110000 110010 100010 "
     "100000 010000 010010 000010"},
    {62,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 111011 "
     "111001 000101 000111 010111 010101 100101 100111 110111 "
     "110110 100110 100100 010100 010110 000110 000100 111000 "
     "111010 101010 101000 011000 011010 001010 001000 111100 "
     "111110 101110 101100 011100 011110 001110 001100 110000 "
     "110010 100010 100000 010000 010010 000010"},
    {64,
     "000000 000001 000011 010011 010001 100001 100011 110011 "
     "110001 001101 001111 011111 011101 101101 101111 111111 "
     "111101 001001 001011 011011 011001 101001 101011 111011 "
     "111001 000101 000111 010111 010101 100101 100111 110111 "
     "110101 110100 110110 100110 100100 010100 010110 000110 "
     "000100 111000 111010 101010 101000 011000 011010 001010 "
     "001000 111100 111110 101110 101100 011100 011110 001110 "
     "001100 110000 110010 100010 100000 010000 010010 000010"},
};

}  // namespace cubecycle::detail

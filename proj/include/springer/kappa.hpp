#pragma once

#include <string>
#include <utility>
#include <vector>

#include "springer/polynomial.hpp"
#include "springer/tableau.hpp"

namespace springer {

// Per-entry statistics of a standard tableau: column[i-1] is the column of
// entry i (1-based), and row_count[i-1] is the number of rows of that length
// in the subtableau of entries 1..i. row_count bounds the move code.
struct PrefixStats {
    std::vector<int> column;
    std::vector<int> row_count;
};

PrefixStats prefix_stats(const StandardTableau& t);

// Exponent vector (k_1..k_n): entry i's move is applied k_i times when
// expanding a standard tableau into a class member. Valid codes satisfy
// 0 <= k_i <= row_count[i-1] - 1.
struct MoveCode {
    std::vector<int> values;

    // comma-separated, e.g. "0,0,0,1,0"
    static MoveCode parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const MoveCode&, const MoveCode&) = default;
};

// Apply the move at entry i exactly code[i] times, for i = 1..n in increasing
// order. The result standardizes back to t and has sum(code) inversions.
// Throws std::out_of_range when the code violates its bounds.
RowStandardTableau decode_tableau(const StandardTableau& t, const MoveCode& code);

// Unique (standardization, code) pair with decode_tableau(T, code) = t,
// computed by peeling the largest misplaced entry down to its home row.
std::pair<StandardTableau, MoveCode> encode_tableau(const RowStandardTableau& t);

// Coefficient of x^m counts the tableaux with standardization t and m
// inversions; computed as the product of q_int(row_count[i]) factors, with
// no enumeration.
Polynomial inversion_distribution(const StandardTableau& t);

} // namespace springer

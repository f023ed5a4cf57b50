#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "springer/kappa.hpp"
#include "springer/polynomial.hpp"
#include "springer/tableau.hpp"

namespace springer {

// All polynomials here are indexed by codimension: the coefficient of x^m
// counts row-standard tableaux with m inversions. Betti numbers read the
// coefficients in reverse (b_m = coefficient of x^(d-m)).

// Product of q_int over the prefix row counts of t.
Polynomial poincare_of_class(const StandardTableau& t);

// Sum of poincare_of_class over all standard tableaux of the shape.
Polynomial poincare_by_class_sum(const Partition& shape,
                                 std::uint64_t cap = kDefaultEnumerationCap);

// Histogram of inversion counts over every row-standard tableau; the
// brute-force oracle for the other two methods.
Polynomial poincare_by_enumeration(const Partition& shape,
                                   std::uint64_t cap = kDefaultEnumerationCap);

// Corner recursion, memoized on the partition.
Polynomial poincare_by_recursion(const Partition& shape);

// Product of q-factorials of the conjugate parts; the distribution of the
// dominance-minimal class. Palindromic of degree springer_dimension(shape).
Polynomial poincare_min_class(const Partition& shape);

// A removable box: nothing to its right, nothing below.
struct Corner {
    int row = 0;    // 0-based
    int column = 0; // 0-based
    int row_count = 0; // rows of the diagram with length column+1
    friend bool operator==(const Corner&, const Corner&) = default;
};

std::vector<Corner> corners(const Partition& shape);
Partition remove_corner(const Partition& shape, const Corner& c);

enum class Method { enumeration, product_sum, recursion, all };

Method method_from_string(std::string_view name); // throws parse_error
std::string method_name(Method m);

struct BettiTable {
    Partition shape;
    std::int64_t dim = 0;
    Polynomial poincare;          // by codimension
    std::vector<mpz_class> betti; // b_0..b_dim, homological order
    mpz_class num_standard;
    mpz_class num_row_standard;
    Method method = Method::all;
    bool agreement = true; // meaningful for Method::all
};

// Computes the table with the chosen method; Method::all runs all three and
// throws cross_check_error if they differ anywhere.
BettiTable betti_numbers(const Partition& shape, Method method = Method::all,
                         std::uint64_t cap = kDefaultEnumerationCap);

// Reference families with closed-form distributions, used to check the engine.
enum class ClosedFormFamily {
    single_row,      // (n): 1
    column,          // (1^n): q_factorial(n)
    row_plus_box,    // (s,1): s + x
    two_column_hook, // (2,1^(r-1)): q_factorial(r-1) * sum (r-p) x^p
    hook,            // (s,1^(r-1)), s >= 2
    two_row,         // (s,t), t <= s
};

// params: single_row/column take {n}; row_plus_box {s}; two_column_hook {r};
// hook {s, r}; two_row {s, t}. Throws std::invalid_argument out of range.
Polynomial closed_form(ClosedFormFamily family, const std::vector<int>& params);

} // namespace springer

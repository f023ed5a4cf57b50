#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace springer {

// A finite sequence of nonnegative integers of fixed length; totals are
// tracked by the caller. Used for the row-length sequences of tableau
// prefixes, which need not be weakly decreasing.
using Composition = std::vector<int>;

// Weakly decreasing positive parts. The empty partition (n = 0) is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Text form: comma-separated parts, e.g. "3,2,2"; "" is the empty partition.
    static Partition parse(std::string_view text);

    int n() const { return total_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int p) const { return parts_[static_cast<std::size_t>(p)]; } // 0-based
    bool empty() const { return parts_.empty(); }

    // Column lengths of the diagram; involutive.
    Partition conjugate() const;

    // Number of rows of length exactly q (q >= 1).
    int rows_of_length(int q) const;

    // true iff other fits inside this diagram row by row.
    bool contains(const Partition& other) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

// dim of the fiber attached to the shape: sum over conjugate parts mu_q of
// mu_q*(mu_q-1)/2.
std::int64_t springer_dimension(const Partition& shape);

// n! / prod(parts!): the number of row-standard tableaux of the shape.
mpz_class row_standard_count(const Partition& shape);

// All partitions of n in descending lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

// Sort a composition decreasingly and drop zeros.
Partition ordered(const Composition& c);

} // namespace springer

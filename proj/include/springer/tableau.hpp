#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// A same-column pair i < j that is out of order. Two cases:
//   (a) i or j has no box on its right and i sits in a strictly lower row;
//   (b) both have right neighbors i', j' and i' > j'.
struct InversionPair {
    int i = 0;
    int j = 0;
    friend bool operator==(const InversionPair&, const InversionPair&) = default;
    friend auto operator<=>(const InversionPair&, const InversionPair&) = default;
};

// Filling of a Young diagram by 1..n, rows strictly increasing to the right.
// Immutable after construction; positions are precomputed.
class RowStandardTableau {
public:
    RowStandardTableau() : RowStandardTableau(std::vector<std::vector<int>>{}) {}
    explicit RowStandardTableau(std::vector<std::vector<int>> rows);

    // Canonical text: rows joined by '/', entries by ',' ("2,4,8/3,6,7/1,5").
    // A comma-free digit shorthand ("248/367/15") is accepted when n <= 9.
    static RowStandardTableau parse(std::string_view text);

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int row, int col) const { // 0-based
        return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    }
    int row_of(int e) const { return pos_[static_cast<std::size_t>(e)].first; }  // 0-based
    int col_of(int e) const { return pos_[static_cast<std::size_t>(e)].second; } // 0-based
    bool has_right_neighbor(int e) const {
        return col_of(e) + 1 < shape_.part(row_of(e));
    }
    int right_neighbor(int e) const { return entry(row_of(e), col_of(e) + 1); }

    bool is_standard() const;

    std::string to_string() const;

    friend bool operator==(const RowStandardTableau&, const RowStandardTableau&) = default;
    friend auto operator<=>(const RowStandardTableau& a, const RowStandardTableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::pair<int, int>> pos_; // pos_[e] = {row, col}, entry-indexed, pos_[0] unused
};

// Row-standard with columns increasing downward; equivalently zero inversions.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(RowStandardTableau t);
    static StandardTableau parse(std::string_view text);

    const RowStandardTableau& tableau() const { return t_; }
    operator const RowStandardTableau&() const { return t_; }
    const Partition& shape() const { return t_.shape(); }
    int n() const { return t_.n(); }
    std::string to_string() const { return t_.to_string(); }

    // Shape of the subtableau of entries 1..i.
    Partition prefix_shape(int i) const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
    friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
        return a.t_ <=> b.t_;
    }

private:
    RowStandardTableau t_;
};

std::vector<InversionPair> inversions(const RowStandardTableau& t);
int inversion_count(const RowStandardTableau& t);

// Sort each column increasingly downward.
StandardTableau standardize(const RowStandardTableau& t);

// pi^(0) .. pi^(n), where pi^(i)[p] = #entries <= i in row p.
std::vector<Composition> prefix_composition_chain(const RowStandardTableau& t);

// Streams every row-standard tableau of the shape in lexicographic order of
// the word (w_1..w_n), w_k = row receiving entry k. Throws
// resource_limit_error when the multinomial count exceeds cap.
void for_each_row_standard(const Partition& shape,
                           const std::function<void(const RowStandardTableau&)>& fn,
                           std::uint64_t cap = kDefaultEnumerationCap);
std::vector<RowStandardTableau> all_row_standard(const Partition& shape,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

// Same order restricted to standard tableaux (generated directly, not filtered).
void for_each_standard(const Partition& shape,
                       const std::function<void(const StandardTableau&)>& fn,
                       std::uint64_t cap = kDefaultEnumerationCap);
std::vector<StandardTableau> all_standard(const Partition& shape,
                                          std::uint64_t cap = kDefaultEnumerationCap);

// Dominance order: S <= T iff every column-prefix box count of every entry
// prefix of S is >= the one of T. Throws std::invalid_argument on shape mismatch.
bool dominance_leq(const StandardTableau& s, const StandardTableau& t);

// Column-consecutive filling: 1..mu_1 down the first column, then the second, etc.
// The unique dominance minimum.
StandardTableau min_standard_tableau(const Partition& shape);

} // namespace springer

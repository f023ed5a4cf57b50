#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "springer/tableau.hpp"

namespace springer {

// Nested intervals [lo_k, hi_k], k = 0..n, with hi_k - lo_k = k, lo weakly
// decreasing, hi weakly increasing, inside [0, n]. Consecutive steps extend
// one endpoint by one; the chain ends at [0, n].
class IntervalChain {
public:
    // Validates every invariant; error messages name the failing index and rule.
    static IntervalChain from_pairs(std::vector<std::pair<int, int>> pairs);

    // "lo-hi" pairs joined by ';', e.g. "2-2;1-2;1-3;0-3".
    static IntervalChain parse(std::string_view text);

    // [0, k]: restriction chain growing on the right.
    static IntervalChain prefix(int n);
    // [n-k, n]: chain growing on the left.
    static IntervalChain suffix(int n);

    int n() const { return static_cast<int>(pairs_.size()) - 1; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int lo(int k) const { return pairs_[static_cast<std::size_t>(k)].first; }
    int hi(int k) const { return pairs_[static_cast<std::size_t>(k)].second; }

    // [n-hi_k, n-lo_k]: an involution; maps the prefix chain to the suffix chain.
    IntervalChain reflected() const;

    std::string to_string() const;

    friend bool operator==(const IntervalChain&, const IntervalChain&) = default;

private:
    IntervalChain() = default;
    std::vector<std::pair<int, int>> pairs_;
};

// All valid chains for a given n. Deterministic order: starting point lo_0
// ascending, then depth-first extending the left endpoint before the right.
std::vector<IntervalChain> all_interval_chains(int n);

// Standard skew tableau: a filling of outer minus inner by distinct integers,
// rows increasing rightward, columns increasing downward.
class SkewTableau {
public:
    // rows[p] holds the entries of row p at columns inner_p .. outer_p - 1.
    SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows);

    // Cells of t holding entries lo+1 .. hi form a skew tableau.
    static SkewTableau between(const StandardTableau& t, int lo, int hi);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int cell_count() const { return outer_.n() - inner_.n(); }

    // Inward slides until the inner shape is empty. The default picks the
    // lexicographically last inner corner each round; the result does not
    // depend on the choice. Entries keep their relative order.
    SkewTableau rectified() const;
    // choose(count) returns an index in [0, count) selecting among the
    // current inner corners; exposed so tests can randomize slide order.
    SkewTableau rectified(const std::function<int(int)>& choose) const;

    std::string to_string() const;

private:
    Partition outer_;
    Partition inner_;
    std::vector<std::vector<int>> rows_;
};

// Rectify and relabel the entries order-isomorphically to 1..m.
StandardTableau jdt_rectify(const SkewTableau& s);

// Shape chain of the rectifications of the chain's subtableaux of t; the
// standard tableau reading that chain. The prefix chain gives back t.
// Throws cross_check_error if the computed shapes do not grow one box at a
// time (cannot happen for a correct implementation).
StandardTableau relabel_tableau(const StandardTableau& t, const IntervalChain& chain);

// relabel_tableau over every standard tableau of the shape, in enumeration order.
std::vector<std::pair<StandardTableau, StandardTableau>>
relabel_table(const Partition& shape, const IntervalChain& chain,
              std::uint64_t cap = kDefaultEnumerationCap);

} // namespace springer

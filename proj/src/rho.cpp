#include "springer/rho.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

IntervalChain IntervalChain::from_pairs(std::vector<std::pair<int, int>> pairs) {
    if (pairs.empty()) throw parse_error("interval chain needs at least the k=0 pair");
    const int n = static_cast<int>(pairs.size()) - 1;
    for (int k = 0; k <= n; ++k) {
        const auto [lo, hi] = pairs[static_cast<std::size_t>(k)];
        if (lo < 0 || hi > n || lo > hi)
            throw parse_error("pair " + std::to_string(k) + " = (" + std::to_string(lo) + "," +
                              std::to_string(hi) + ") is not inside [0," + std::to_string(n) +
                              "]");
        if (hi - lo != k)
            throw parse_error("pair " + std::to_string(k) + " has width " +
                              std::to_string(hi - lo) + ", expected " + std::to_string(k));
        if (k > 0) {
            const auto [plo, phi] = pairs[static_cast<std::size_t>(k - 1)];
            if (lo > plo)
                throw parse_error("left endpoints increase at index " + std::to_string(k));
            if (hi < phi)
                throw parse_error("right endpoints decrease at index " + std::to_string(k));
        }
    }
    IntervalChain chain;
    chain.pairs_ = std::move(pairs);
    return chain;
}

IntervalChain IntervalChain::parse(std::string_view text) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t pos = 0;
    auto to_int = [&](std::string_view tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw parse_error("bad interval endpoint '" + std::string(tok) + "' in '" +
                              std::string(text) + "'");
        return value;
    };
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        std::string_view tok = text.substr(
            pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
        std::size_t dash = tok.find('-');
        if (dash == std::string_view::npos)
            throw parse_error("interval pair '" + std::string(tok) + "' is missing '-'");
        pairs.emplace_back(to_int(tok.substr(0, dash)), to_int(tok.substr(dash + 1)));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return from_pairs(std::move(pairs));
}

IntervalChain IntervalChain::prefix(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k <= n; ++k) pairs.emplace_back(0, k);
    return from_pairs(std::move(pairs));
}

IntervalChain IntervalChain::suffix(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k <= n; ++k) pairs.emplace_back(n - k, n);
    return from_pairs(std::move(pairs));
}

IntervalChain IntervalChain::reflected() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(pairs_.size());
    for (const auto& [lo, hi] : pairs_) pairs.emplace_back(n() - hi, n() - lo);
    return from_pairs(std::move(pairs));
}

std::string IntervalChain::to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (k) out << ';';
        out << pairs_[k].first << '-' << pairs_[k].second;
    }
    return out.str();
}

std::vector<IntervalChain> all_interval_chains(int n) {
    std::vector<IntervalChain> out;
    std::vector<std::pair<int, int>> pairs;
    auto rec = [&](auto&& self, int lo, int hi) -> void {
        pairs.emplace_back(lo, hi);
        if (hi - lo == n) {
            out.push_back(IntervalChain::from_pairs(pairs));
        } else {
            if (lo > 0) self(self, lo - 1, hi);
            if (hi < n) self(self, lo, hi + 1);
        }
        pairs.pop_back();
    };
    for (int start = 0; start <= n; ++start) rec(rec, start, start);
    return out;
}

SkewTableau::SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("inner shape " + inner_.to_string() +
                                    " does not fit inside " + outer_.to_string());
    if (static_cast<int>(rows_.size()) != outer_.rows())
        throw std::invalid_argument("skew tableau needs one row list per outer row");
    std::vector<int> seen;
    for (int p = 0; p < outer_.rows(); ++p) {
        const int lo = p < inner_.rows() ? inner_.part(p) : 0;
        const auto& row = rows_[static_cast<std::size_t>(p)];
        if (static_cast<int>(row.size()) != outer_.part(p) - lo)
            throw std::invalid_argument("row " + std::to_string(p + 1) + " holds " +
                                        std::to_string(row.size()) + " entries, expected " +
                                        std::to_string(outer_.part(p) - lo));
        for (std::size_t c = 0; c + 1 < row.size(); ++c)
            if (row[c] >= row[c + 1])
                throw std::invalid_argument("skew row " + std::to_string(p + 1) +
                                            " is not increasing");
        seen.insert(seen.end(), row.begin(), row.end());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("skew tableau entries must be distinct");
    // columns increase where vertically adjacent cells are both filled
    for (int p = 0; p + 1 < outer_.rows(); ++p) {
        const int lo = std::max(p < inner_.rows() ? inner_.part(p) : 0,
                                p + 1 < inner_.rows() ? inner_.part(p + 1) : 0);
        for (int c = lo; c < outer_.part(p + 1); ++c) {
            const int above = rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(
                c - (p < inner_.rows() ? inner_.part(p) : 0))];
            const int below = rows_[static_cast<std::size_t>(p + 1)][static_cast<std::size_t>(
                c - (p + 1 < inner_.rows() ? inner_.part(p + 1) : 0))];
            if (above >= below)
                throw std::invalid_argument("skew column " + std::to_string(c + 1) +
                                            " is not increasing");
        }
    }
}

SkewTableau SkewTableau::between(const StandardTableau& t, int lo, int hi) {
    if (lo < 0 || hi > t.n() || lo > hi)
        throw std::invalid_argument("entry range (" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "] is not inside the tableau");
    const Partition outer = t.prefix_shape(hi);
    const Partition inner = t.prefix_shape(lo);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(outer.rows()));
    for (int p = 0; p < outer.rows(); ++p) {
        const int from = p < inner.rows() ? inner.part(p) : 0;
        for (int c = from; c < outer.part(p); ++c)
            rows[static_cast<std::size_t>(p)].push_back(t.tableau().entry(p, c));
    }
    return SkewTableau(outer, inner, std::move(rows));
}

namespace {

constexpr int kEmptyCell = 0;

// grid[p][c] = entry or kEmptyCell for cells of inner
struct Grid {
    std::vector<std::vector<int>> cells;
    std::vector<int> inner; // per-row count of leading empty cells

    bool filled(int p, int c) const {
        return p < static_cast<int>(cells.size()) &&
               c < static_cast<int>(cells[static_cast<std::size_t>(p)].size()) &&
               cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] != kEmptyCell;
    }
};

} // namespace

SkewTableau SkewTableau::rectified() const {
    return rectified([](int count) { return count - 1; });
}

SkewTableau SkewTableau::rectified(const std::function<int(int)>& choose) const {
    Grid grid;
    grid.cells.resize(static_cast<std::size_t>(outer_.rows()));
    grid.inner.resize(static_cast<std::size_t>(outer_.rows()));
    for (int p = 0; p < outer_.rows(); ++p) {
        const int lo = p < inner_.rows() ? inner_.part(p) : 0;
        grid.inner[static_cast<std::size_t>(p)] = lo;
        auto& row = grid.cells[static_cast<std::size_t>(p)];
        row.assign(static_cast<std::size_t>(outer_.part(p)), kEmptyCell);
        for (int c = lo; c < outer_.part(p); ++c)
            row[static_cast<std::size_t>(c)] =
                rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(c - lo)];
    }

    auto inner_corners = [&]() {
        // removable corners of the current inner shape, in (row, col) lex order
        std::vector<std::pair<int, int>> out;
        for (int p = 0; p < static_cast<int>(grid.inner.size()); ++p) {
            const int len = grid.inner[static_cast<std::size_t>(p)];
            if (len == 0) continue;
            const bool below_shorter = p + 1 >= static_cast<int>(grid.inner.size()) ||
                                       grid.inner[static_cast<std::size_t>(p + 1)] < len;
            if (below_shorter) out.emplace_back(p, len - 1);
        }
        return out;
    };

    while (true) {
        auto corners = inner_corners();
        if (corners.empty()) break;
        const int pick = choose(static_cast<int>(corners.size()));
        if (pick < 0 || pick >= static_cast<int>(corners.size()))
            throw std::invalid_argument("slide choice out of range");
        auto [p, c] = corners[static_cast<std::size_t>(pick)];
        // slide the hole outward
        while (true) {
            const bool right = grid.filled(p, c + 1);
            const bool below = grid.filled(p + 1, c);
            if (!right && !below) break;
            int from_p = p, from_c = c;
            if (right && below) {
                if (grid.cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(c + 1)] <
                    grid.cells[static_cast<std::size_t>(p + 1)][static_cast<std::size_t>(c)])
                    from_c = c + 1;
                else
                    from_p = p + 1;
            } else if (right) {
                from_c = c + 1;
            } else {
                from_p = p + 1;
            }
            grid.cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] =
                grid.cells[static_cast<std::size_t>(from_p)][static_cast<std::size_t>(from_c)];
            grid.cells[static_cast<std::size_t>(from_p)][static_cast<std::size_t>(from_c)] =
                kEmptyCell;
            p = from_p;
            c = from_c;
        }
        // the hole ended at an outer corner: shrink both shapes
        grid.cells[static_cast<std::size_t>(p)].pop_back();
        if (grid.cells[static_cast<std::size_t>(p)].empty()) {
            grid.cells.erase(grid.cells.begin() + p);
            grid.inner.erase(grid.inner.begin() + p);
        }
        // recompute inner lengths: count leading empty cells per row
        for (std::size_t row = 0; row < grid.cells.size(); ++row) {
            int len = 0;
            while (len < static_cast<int>(grid.cells[row].size()) &&
                   grid.cells[row][static_cast<std::size_t>(len)] == kEmptyCell)
                ++len;
            grid.inner[row] = len;
        }
    }

    std::vector<int> outer_parts;
    for (const auto& row : grid.cells) outer_parts.push_back(static_cast<int>(row.size()));
    std::vector<std::vector<int>> rows;
    rows.reserve(grid.cells.size());
    for (auto& row : grid.cells) rows.push_back(row);
    return SkewTableau(Partition(std::move(outer_parts)), Partition{}, std::move(rows));
}

std::string SkewTableau::to_string() const {
    std::ostringstream out;
    out << inner_.to_string() << '|';
    for (std::size_t p = 0; p < rows_.size(); ++p) {
        if (p) out << '/';
        const int lo = static_cast<int>(p) < inner_.rows() ? inner_.part(static_cast<int>(p)) : 0;
        for (int c = 0; c < lo; ++c) out << (c ? ",." : ".");
        for (std::size_t c = 0; c < rows_[p].size(); ++c) {
            if (c || lo) out << ',';
            out << rows_[p][c];
        }
    }
    return out.str();
}

StandardTableau jdt_rectify(const SkewTableau& s) {
    const SkewTableau straight = s.rectified();
    // order-isomorphic relabeling to 1..m
    std::vector<int> values;
    for (const auto& row : straight.rows()) values.insert(values.end(), row.begin(), row.end());
    std::sort(values.begin(), values.end());
    std::vector<std::vector<int>> rows;
    rows.reserve(straight.rows().size());
    for (const auto& row : straight.rows()) {
        std::vector<int> ranked;
        ranked.reserve(row.size());
        for (int e : row)
            ranked.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), e) -
                                              values.begin()) +
                             1);
        rows.push_back(std::move(ranked));
    }
    return StandardTableau(RowStandardTableau(std::move(rows)));
}

StandardTableau relabel_tableau(const StandardTableau& t, const IntervalChain& chain) {
    if (chain.n() != t.n())
        throw std::invalid_argument("chain is for n = " + std::to_string(chain.n()) +
                                    ", tableau has n = " + std::to_string(t.n()));
    std::vector<Partition> shapes;
    shapes.reserve(static_cast<std::size_t>(chain.n()) + 1);
    for (int k = 0; k <= chain.n(); ++k)
        shapes.push_back(SkewTableau::between(t, chain.lo(k), chain.hi(k)).rectified().outer());

    std::vector<std::vector<int>> rows;
    std::vector<int> lengths;
    for (int k = 1; k <= chain.n(); ++k) {
        const Partition& prev = shapes[static_cast<std::size_t>(k - 1)];
        const Partition& cur = shapes[static_cast<std::size_t>(k)];
        if (cur.n() != k || !cur.contains(prev))
            throw cross_check_error("rectified shapes of " + t.to_string() + " under chain " +
                                    chain.to_string() + " do not grow one box at a time");
        int grown = -1;
        for (int p = 0; p < cur.rows(); ++p) {
            const int before = p < prev.rows() ? prev.part(p) : 0;
            if (cur.part(p) == before + 1 && grown == -1)
                grown = p;
            else if (cur.part(p) != before)
                throw cross_check_error("rectified shapes of " + t.to_string() +
                                        " under chain " + chain.to_string() +
                                        " do not grow one box at a time");
        }
        if (static_cast<int>(rows.size()) <= grown) rows.resize(static_cast<std::size_t>(grown) + 1);
        rows[static_cast<std::size_t>(grown)].push_back(k);
    }
    return StandardTableau(RowStandardTableau(std::move(rows)));
}

std::vector<std::pair<StandardTableau, StandardTableau>>
relabel_table(const Partition& shape, const IntervalChain& chain, std::uint64_t cap) {
    std::vector<std::pair<StandardTableau, StandardTableau>> table;
    for_each_standard(
        shape,
        [&](const StandardTableau& t) { table.emplace_back(t, relabel_tableau(t, chain)); },
        cap);
    return table;
}

} // namespace springer

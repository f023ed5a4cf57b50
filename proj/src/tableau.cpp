#include "springer/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

namespace {

std::vector<int> row_lengths(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
    return lengths;
}

} // namespace

RowStandardTableau::RowStandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
    try {
        shape_ = Partition(row_lengths(rows_));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("tableau rows must have weakly decreasing positive lengths");
    }
    const int n = shape_.n();
    pos_.assign(static_cast<std::size_t>(n) + 1, {-1, -1});
    for (int p = 0; p < shape_.rows(); ++p) {
        const auto& row = rows_[static_cast<std::size_t>(p)];
        for (int c = 0; c < static_cast<int>(row.size()); ++c) {
            int e = row[static_cast<std::size_t>(c)];
            if (e < 1 || e > n)
                throw std::invalid_argument("tableau entry " + std::to_string(e) +
                                            " outside 1.." + std::to_string(n));
            if (pos_[static_cast<std::size_t>(e)].first != -1)
                throw std::invalid_argument("duplicate tableau entry " + std::to_string(e));
            if (c > 0 && row[static_cast<std::size_t>(c - 1)] >= e)
                throw std::invalid_argument("row " + std::to_string(p + 1) +
                                            " is not strictly increasing");
            pos_[static_cast<std::size_t>(e)] = {p, c};
        }
    }
}

RowStandardTableau RowStandardTableau::parse(std::string_view text) {
    auto split = [](std::string_view s, char sep) {
        std::vector<std::string_view> out;
        std::size_t pos = 0;
        while (true) {
            std::size_t next = s.find(sep, pos);
            out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                       : next - pos));
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        return out;
    };
    auto to_int = [&](std::string_view tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw parse_error("bad tableau entry '" + std::string(tok) + "' in '" +
                              std::string(text) + "'");
        return value;
    };

    if (text.empty()) return RowStandardTableau{};
    const auto row_tokens = split(text, '/');

    // Comma form first; the digit shorthand is the fallback for n <= 9.
    auto build = [&](bool shorthand) {
        std::vector<std::vector<int>> rows;
        rows.reserve(row_tokens.size());
        for (auto tok : row_tokens) {
            std::vector<int> row;
            if (shorthand) {
                for (char ch : tok) {
                    if (ch < '1' || ch > '9')
                        throw parse_error("bad digit '" + std::string(1, ch) + "' in '" +
                                          std::string(text) + "'");
                    row.push_back(ch - '0');
                }
            } else {
                for (auto entry_tok : split(tok, ',')) row.push_back(to_int(entry_tok));
            }
            rows.push_back(std::move(row));
        }
        return RowStandardTableau(std::move(rows));
    };

    try {
        return build(false);
    } catch (const std::exception&) {
        bool comma_free = text.find(',') == std::string_view::npos;
        if (!comma_free) throw parse_error("cannot parse tableau '" + std::string(text) + "'");
        try {
            return build(true);
        } catch (const std::exception& e) {
            throw parse_error("cannot parse tableau '" + std::string(text) + "': " + e.what());
        }
    }
}

bool RowStandardTableau::is_standard() const {
    for (int p = 0; p + 1 < shape_.rows(); ++p)
        for (int c = 0; c < shape_.part(p + 1); ++c)
            if (entry(p, c) > entry(p + 1, c)) return false;
    return true;
}

std::string RowStandardTableau::to_string() const {
    std::ostringstream out;
    for (std::size_t p = 0; p < rows_.size(); ++p) {
        if (p) out << '/';
        for (std::size_t c = 0; c < rows_[p].size(); ++c) {
            if (c) out << ',';
            out << rows_[p][c];
        }
    }
    return out.str();
}

StandardTableau::StandardTableau(RowStandardTableau t) : t_(std::move(t)) {
    if (!t_.is_standard())
        throw std::invalid_argument("tableau " + t_.to_string() +
                                    " has a decreasing column; not standard");
}

StandardTableau StandardTableau::parse(std::string_view text) {
    try {
        return StandardTableau(RowStandardTableau::parse(text));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

Partition StandardTableau::prefix_shape(int i) const {
    std::vector<int> lengths(static_cast<std::size_t>(shape().rows()), 0);
    for (int e = 1; e <= i; ++e) lengths[static_cast<std::size_t>(t_.row_of(e))]++;
    while (!lengths.empty() && lengths.back() == 0) lengths.pop_back();
    return Partition(std::move(lengths));
}

std::vector<InversionPair> inversions(const RowStandardTableau& t) {
    std::vector<InversionPair> inv;
    const Partition cols = t.shape().conjugate();
    for (int q = 0; q < cols.rows(); ++q) {
        // entries of column q, top to bottom
        std::vector<int> column;
        for (int p = 0; p < cols.part(q); ++p) column.push_back(t.entry(p, q));
        for (std::size_t a = 0; a < column.size(); ++a) {
            for (std::size_t b = 0; b < column.size(); ++b) {
                int i = column[a], j = column[b];
                if (i >= j) continue;
                bool inverted;
                if (t.has_right_neighbor(i) && t.has_right_neighbor(j))
                    inverted = t.right_neighbor(i) > t.right_neighbor(j);
                else
                    inverted = t.row_of(i) > t.row_of(j);
                if (inverted) inv.push_back({i, j});
            }
        }
    }
    std::sort(inv.begin(), inv.end());
    return inv;
}

int inversion_count(const RowStandardTableau& t) {
    return static_cast<int>(inversions(t).size());
}

StandardTableau standardize(const RowStandardTableau& t) {
    const Partition cols = t.shape().conjugate();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(t.shape().rows()));
    for (int q = 0; q < cols.rows(); ++q) {
        std::vector<int> column;
        for (int p = 0; p < cols.part(q); ++p) column.push_back(t.entry(p, q));
        std::sort(column.begin(), column.end());
        for (int p = 0; p < cols.part(q); ++p)
            rows[static_cast<std::size_t>(p)].push_back(column[static_cast<std::size_t>(p)]);
    }
    return StandardTableau(RowStandardTableau(std::move(rows)));
}

std::vector<Composition> prefix_composition_chain(const RowStandardTableau& t) {
    const int r = t.shape().rows();
    std::vector<Composition> chain;
    chain.reserve(static_cast<std::size_t>(t.n()) + 1);
    Composition counts(static_cast<std::size_t>(r), 0);
    chain.push_back(counts);
    for (int e = 1; e <= t.n(); ++e) {
        counts[static_cast<std::size_t>(t.row_of(e))]++;
        chain.push_back(counts);
    }
    return chain;
}

void for_each_row_standard(const Partition& shape,
                           const std::function<void(const RowStandardTableau&)>& fn,
                           std::uint64_t cap) {
    mpz_class count = row_standard_count(shape);
    if (count > cap)
        throw resource_limit_error("shape " + shape.to_string() + " has " + count.get_str() +
                                   " row-standard tableaux, over the cap of " +
                                   std::to_string(cap));
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(shape.n()));
    for (int p = 0; p < shape.rows(); ++p)
        word.insert(word.end(), static_cast<std::size_t>(shape.part(p)), p);
    do {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
        for (std::size_t k = 0; k < word.size(); ++k)
            rows[static_cast<std::size_t>(word[k])].push_back(static_cast<int>(k) + 1);
        fn(RowStandardTableau(std::move(rows)));
    } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<RowStandardTableau> all_row_standard(const Partition& shape, std::uint64_t cap) {
    std::vector<RowStandardTableau> out;
    for_each_row_standard(shape, [&](const RowStandardTableau& t) { out.push_back(t); }, cap);
    return out;
}

void for_each_standard(const Partition& shape,
                       const std::function<void(const StandardTableau&)>& fn,
                       std::uint64_t cap) {
    const int n = shape.n();
    const int r = shape.rows();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(r));
    std::vector<int> lengths(static_cast<std::size_t>(r), 0);
    std::uint64_t emitted = 0;
    auto rec = [&](auto&& self, int e) -> void {
        if (e > n) {
            if (++emitted > cap)
                throw resource_limit_error("standard tableaux of shape " + shape.to_string() +
                                           " exceed the cap of " + std::to_string(cap));
            fn(StandardTableau(RowStandardTableau(rows)));
            return;
        }
        for (int p = 0; p < r; ++p) {
            if (lengths[static_cast<std::size_t>(p)] >= shape.part(p)) continue;
            if (p > 0 && lengths[static_cast<std::size_t>(p - 1)] <=
                             lengths[static_cast<std::size_t>(p)])
                continue; // column would decrease
            rows[static_cast<std::size_t>(p)].push_back(e);
            lengths[static_cast<std::size_t>(p)]++;
            self(self, e + 1);
            rows[static_cast<std::size_t>(p)].pop_back();
            lengths[static_cast<std::size_t>(p)]--;
        }
    };
    rec(rec, 1);
}

std::vector<StandardTableau> all_standard(const Partition& shape, std::uint64_t cap) {
    std::vector<StandardTableau> out;
    for_each_standard(shape, [&](const StandardTableau& t) { out.push_back(t); }, cap);
    return out;
}

bool dominance_leq(const StandardTableau& s, const StandardTableau& t) {
    if (s.shape() != t.shape())
        throw std::invalid_argument("dominance compares tableaux of equal shape; got " +
                                    s.shape().to_string() + " vs " + t.shape().to_string());
    const int n = s.n();
    const int num_cols = s.shape().empty() ? 0 : s.shape().part(0);
    std::vector<int> cs(static_cast<std::size_t>(num_cols), 0);
    std::vector<int> ct(static_cast<std::size_t>(num_cols), 0);
    const RowStandardTableau& st = s.tableau();
    const RowStandardTableau& tt = t.tableau();
    for (int e = 1; e <= n; ++e) {
        cs[static_cast<std::size_t>(st.col_of(e))]++;
        ct[static_cast<std::size_t>(tt.col_of(e))]++;
        int run_s = 0, run_t = 0;
        for (int q = 0; q < num_cols; ++q) {
            run_s += cs[static_cast<std::size_t>(q)];
            run_t += ct[static_cast<std::size_t>(q)];
            if (run_s < run_t) return false;
        }
    }
    return true;
}

StandardTableau min_standard_tableau(const Partition& shape) {
    const Partition cols = shape.conjugate();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    int next = 1;
    for (int q = 0; q < cols.rows(); ++q)
        for (int p = 0; p < cols.part(q); ++p) rows[static_cast<std::size_t>(p)].push_back(next++);
    return StandardTableau(RowStandardTableau(std::move(rows)));
}

} // namespace springer

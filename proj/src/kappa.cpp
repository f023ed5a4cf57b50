#include "springer/kappa.hpp"

#include <charconv>
#include <sstream>

#include "springer/errors.hpp"
#include "springer/moves.hpp"

namespace springer {

PrefixStats prefix_stats(const StandardTableau& t) {
    const RowStandardTableau& tab = t.tableau();
    const int n = t.n();
    PrefixStats stats;
    stats.column.reserve(static_cast<std::size_t>(n));
    stats.row_count.reserve(static_cast<std::size_t>(n));
    // rows_with_len[L] = rows of length L in the prefix processed so far
    std::vector<int> rows_with_len(static_cast<std::size_t>(n) + 1, 0);
    for (int e = 1; e <= n; ++e) {
        const int col = tab.col_of(e) + 1; // 1-based length after placing e
        if (col > 1) rows_with_len[static_cast<std::size_t>(col - 1)]--;
        rows_with_len[static_cast<std::size_t>(col)]++;
        stats.column.push_back(col);
        stats.row_count.push_back(rows_with_len[static_cast<std::size_t>(col)]);
    }
    return stats;
}

MoveCode MoveCode::parse(std::string_view text) {
    MoveCode code;
    if (text.empty()) return code;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
            throw parse_error("bad move-code value '" + std::string(tok) + "'");
        code.values.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return code;
}

std::string MoveCode::to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out << ',';
        out << values[k];
    }
    return out.str();
}

RowStandardTableau decode_tableau(const StandardTableau& t, const MoveCode& code) {
    const int n = t.n();
    if (static_cast<int>(code.values.size()) != n)
        throw std::out_of_range("move code has " + std::to_string(code.values.size()) +
                                " values for a tableau of size " + std::to_string(n));
    const PrefixStats stats = prefix_stats(t);
    for (int i = 1; i <= n; ++i) {
        const int k = code.values[static_cast<std::size_t>(i - 1)];
        const int bound = stats.row_count[static_cast<std::size_t>(i - 1)] - 1;
        if (k < 0 || k > bound)
            throw std::out_of_range("move-code value " + std::to_string(k) + " for entry " +
                                    std::to_string(i) + " exceeds bound " +
                                    std::to_string(bound));
    }
    RowStandardTableau result = t.tableau();
    for (int i = 1; i <= n; ++i)
        for (int step = 0; step < code.values[static_cast<std::size_t>(i - 1)]; ++step)
            result = apply_move(result, i);
    return result;
}

std::pair<StandardTableau, MoveCode> encode_tableau(const RowStandardTableau& t) {
    MoveCode code;
    code.values.assign(static_cast<std::size_t>(t.n()), 0);
    const StandardTableau target = standardize(t);
    RowStandardTableau cur = t;
    while (true) {
        int m = 0;
        for (int e = t.n(); e >= 1; --e) {
            if (cur.row_of(e) != target.tableau().row_of(e) ||
                cur.col_of(e) != target.tableau().col_of(e)) {
                m = e;
                break;
            }
        }
        if (m == 0) break;
        const int below_row = cur.row_of(m) + 1;
        if (below_row >= cur.shape().rows() || cur.shape().part(below_row) <= cur.col_of(m))
            throw cross_check_error("misplaced entry " + std::to_string(m) + " of " +
                                    cur.to_string() + " has no below neighbor");
        cur = apply_move(cur, cur.entry(below_row, cur.col_of(m)));
        code.values[static_cast<std::size_t>(m - 1)]++;
    }
    return {target, std::move(code)};
}

Polynomial inversion_distribution(const StandardTableau& t) {
    Polynomial dist = Polynomial::constant(1);
    for (int p : prefix_stats(t).row_count) dist *= q_int(p);
    return dist;
}

} // namespace springer

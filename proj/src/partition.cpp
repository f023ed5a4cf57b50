#include "springer/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t p = 0; p < parts_.size(); ++p) {
        if (parts_[p] <= 0)
            throw std::invalid_argument("partition parts must be positive, got " +
                                        std::to_string(parts_[p]));
        if (p > 0 && parts_[p] > parts_[p - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing at index " +
                                        std::to_string(p));
        total_ += parts_[p];
    }
}

Partition Partition::parse(std::string_view text) {
    if (text.empty()) return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw parse_error("bad partition part '" + std::string(tok) + "' in '" +
                              std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string(e.what()) + " in '" + std::string(text) + "'");
    }
}

Partition Partition::conjugate() const {
    std::vector<int> mu;
    if (!parts_.empty()) {
        mu.resize(static_cast<std::size_t>(parts_[0]));
        for (int q = 1; q <= parts_[0]; ++q)
            mu[static_cast<std::size_t>(q - 1)] = static_cast<int>(
                std::count_if(parts_.begin(), parts_.end(), [q](int p) { return p >= q; }));
    }
    return Partition(std::move(mu));
}

int Partition::rows_of_length(int q) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), q));
}

bool Partition::contains(const Partition& other) const {
    if (other.rows() > rows()) return false;
    for (int p = 0; p < other.rows(); ++p)
        if (other.part(p) > part(p)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
        if (p) out << ',';
        out << parts_[p];
    }
    return out.str();
}

std::int64_t springer_dimension(const Partition& shape) {
    std::int64_t d = 0;
    const Partition cols = shape.conjugate();
    for (int mu : cols.parts()) d += static_cast<std::int64_t>(mu) * (mu - 1) / 2;
    return d;
}

mpz_class row_standard_count(const Partition& shape) {
    mpz_class count;
    mpz_fac_ui(count.get_mpz_t(), static_cast<unsigned long>(shape.n()));
    for (int part : shape.parts()) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(part));
        mpz_divexact(count.get_mpz_t(), count.get_mpz_t(), f.get_mpz_t());
    }
    return count;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending lex: always extend with the largest part allowed
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Partition ordered(const Composition& c) {
    std::vector<int> parts;
    parts.reserve(c.size());
    for (int e : c)
        if (e > 0) parts.push_back(e);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

} // namespace springer

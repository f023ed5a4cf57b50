#include "springer/poincare.hpp"

#include <map>

#include "springer/errors.hpp"

namespace springer {

Polynomial poincare_of_class(const StandardTableau& t) {
    return inversion_distribution(t);
}

Polynomial poincare_by_class_sum(const Partition& shape, std::uint64_t cap) {
    Polynomial sum;
    for_each_standard(
        shape, [&](const StandardTableau& t) { sum += poincare_of_class(t); }, cap);
    return sum;
}

Polynomial poincare_by_enumeration(const Partition& shape, std::uint64_t cap) {
    if (row_standard_count(shape) > cap)
        throw resource_limit_error("shape " + shape.to_string() + " has " +
                                   row_standard_count(shape).get_str() +
                                   " row-standard tableaux, over the cap of " +
                                   std::to_string(cap));
    std::vector<mpz_class> hist(static_cast<std::size_t>(springer_dimension(shape)) + 1, 0);
    for_each_row_standard(
        shape,
        [&](const RowStandardTableau& t) {
            const std::size_t m = static_cast<std::size_t>(inversion_count(t));
            if (m >= hist.size()) hist.resize(m + 1, 0);
            hist[m] += 1;
        },
        cap);
    return Polynomial(std::move(hist));
}

std::vector<Corner> corners(const Partition& shape) {
    std::vector<Corner> out;
    for (int p = 0; p < shape.rows(); ++p) {
        const bool last_of_length = p + 1 == shape.rows() || shape.part(p + 1) < shape.part(p);
        if (!last_of_length) continue;
        Corner c;
        c.row = p;
        c.column = shape.part(p) - 1;
        c.row_count = shape.rows_of_length(shape.part(p));
        out.push_back(c);
    }
    return out;
}

Partition remove_corner(const Partition& shape, const Corner& c) {
    std::vector<int> parts = shape.parts();
    parts[static_cast<std::size_t>(c.row)]--;
    if (parts[static_cast<std::size_t>(c.row)] == 0) parts.erase(parts.begin() + c.row);
    return Partition(std::move(parts));
}

namespace {

Polynomial recursion_memo(const Partition& shape, std::map<std::vector<int>, Polynomial>& memo) {
    if (shape.empty()) return Polynomial::constant(1);
    auto it = memo.find(shape.parts());
    if (it != memo.end()) return it->second;
    Polynomial sum;
    for (const Corner& c : corners(shape)) {
        Polynomial term = q_int(c.row_count);
        term *= recursion_memo(remove_corner(shape, c), memo);
        sum += term;
    }
    memo.emplace(shape.parts(), sum);
    return sum;
}

} // namespace

Polynomial poincare_by_recursion(const Partition& shape) {
    std::map<std::vector<int>, Polynomial> memo;
    return recursion_memo(shape, memo);
}

Polynomial poincare_min_class(const Partition& shape) {
    Polynomial product = Polynomial::constant(1);
    const Partition cols = shape.conjugate();
    for (int mu : cols.parts()) product *= q_factorial(mu);
    return product;
}

Method method_from_string(std::string_view name) {
    if (name == "enumeration") return Method::enumeration;
    if (name == "product-sum") return Method::product_sum;
    if (name == "recursion") return Method::recursion;
    if (name == "all") return Method::all;
    throw parse_error("unknown method '" + std::string(name) +
                      "' (expected enumeration, product-sum, recursion or all)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::enumeration: return "enumeration";
        case Method::product_sum: return "product-sum";
        case Method::recursion: return "recursion";
        case Method::all: return "all";
    }
    return "?";
}

BettiTable betti_numbers(const Partition& shape, Method method, std::uint64_t cap) {
    BettiTable table;
    table.shape = shape;
    table.dim = springer_dimension(shape);
    table.method = method;

    switch (method) {
        case Method::enumeration: table.poincare = poincare_by_enumeration(shape, cap); break;
        case Method::product_sum: table.poincare = poincare_by_class_sum(shape, cap); break;
        case Method::recursion: table.poincare = poincare_by_recursion(shape); break;
        case Method::all: {
            const Polynomial by_enum = poincare_by_enumeration(shape, cap);
            const Polynomial by_sum = poincare_by_class_sum(shape, cap);
            const Polynomial by_rec = poincare_by_recursion(shape);
            if (by_enum != by_sum || by_sum != by_rec)
                throw cross_check_error(
                    "methods disagree on shape " + shape.to_string() + ": enumeration " +
                    by_enum.to_string() + ", product-sum " + by_sum.to_string() +
                    ", recursion " + by_rec.to_string());
            table.poincare = by_enum;
            break;
        }
    }

    table.betti.reserve(static_cast<std::size_t>(table.dim) + 1);
    for (std::int64_t m = 0; m <= table.dim; ++m)
        table.betti.push_back(table.poincare.coeff(static_cast<int>(table.dim - m)));
    table.num_standard = table.poincare.coeff(0);
    table.num_row_standard = row_standard_count(shape);
    return table;
}

namespace {

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

} // namespace

Polynomial closed_form(ClosedFormFamily family, const std::vector<int>& params) {
    switch (family) {
        case ClosedFormFamily::single_row: {
            require(params.size() == 1 && params[0] >= 0, "single_row takes {n}, n >= 0");
            return Polynomial::constant(1);
        }
        case ClosedFormFamily::column: {
            require(params.size() == 1 && params[0] >= 0, "column takes {n}, n >= 0");
            return q_factorial(params[0]);
        }
        case ClosedFormFamily::row_plus_box: {
            require(params.size() == 1 && params[0] >= 1, "row_plus_box takes {s}, s >= 1");
            return Polynomial({params[0], 1});
        }
        case ClosedFormFamily::two_column_hook: {
            require(params.size() == 1 && params[0] >= 1, "two_column_hook takes {r}, r >= 1");
            const int r = params[0];
            std::vector<mpz_class> sum(static_cast<std::size_t>(r));
            for (int p = 0; p <= r - 1; ++p) sum[static_cast<std::size_t>(p)] = r - p;
            return q_factorial(r - 1) * Polynomial(std::move(sum));
        }
        case ClosedFormFamily::hook: {
            require(params.size() == 2 && params[0] >= 2 && params[1] >= 1,
                    "hook takes {s, r}, s >= 2, r >= 1");
            const int s = params[0], r = params[1];
            Polynomial sum;
            for (int p = 0; p <= r - 1; ++p) sum += q_int(r - p) * binomial(s + p - 2, p);
            return q_factorial(r - 1) * sum;
        }
        case ClosedFormFamily::two_row: {
            require(params.size() == 2 && params[0] >= params[1] && params[1] >= 0 &&
                        params[0] >= 1,
                    "two_row takes {s, t}, s >= t >= 0, s >= 1");
            const int s = params[0], t = params[1];
            Polynomial bracket2 = q_int(2);
            // powers of (1+x) up to t
            std::vector<Polynomial> pow(static_cast<std::size_t>(t) + 1);
            pow[0] = Polynomial::constant(1);
            for (int e = 1; e <= t; ++e) pow[static_cast<std::size_t>(e)] = pow[static_cast<std::size_t>(e - 1)] * bracket2;
            Polynomial result = pow[static_cast<std::size_t>(t)];
            for (int p = 1; p <= t; ++p) {
                mpz_class scalar = binomial(s + p - 1, p - 1) * (s - p);
                mpz_divexact_ui(scalar.get_mpz_t(), scalar.get_mpz_t(),
                                static_cast<unsigned long>(p));
                result += pow[static_cast<std::size_t>(t - p)] * scalar;
            }
            return result;
        }
    }
    throw std::invalid_argument("unknown closed-form family");
}

} // namespace springer

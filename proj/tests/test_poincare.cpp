#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "springer/errors.hpp"
#include "springer/poincare.hpp"
#include "springer/report.hpp"

using namespace springer;

TEST_CASE("per-class polynomials") {
    CHECK(poincare_of_class(min_standard_tableau(Partition({2, 2, 1}))) ==
          Polynomial({1, 3, 4, 3, 1}));
    CHECK(poincare_of_class(StandardTableau::parse("1,2/3,4/5")) == Polynomial({1, 1}));
    CHECK(poincare_of_class(StandardTableau::parse("1,2,3,4")) == Polynomial::constant(1));
}

TEST_CASE("class sum") {
    CHECK(poincare_by_class_sum(Partition({2, 2, 1})) == Polynomial({5, 11, 9, 4, 1}));
    CHECK(poincare_by_class_sum(Partition({1, 1, 1, 1})) == q_factorial(4));
    CHECK(poincare_by_class_sum(Partition({6})) == Polynomial::constant(1));
}

TEST_CASE("enumeration histogram") {
    CHECK(poincare_by_enumeration(Partition({2, 2, 1})) == Polynomial({5, 11, 9, 4, 1}));
    CHECK(poincare_by_enumeration(Partition({2, 1})) == Polynomial({2, 1}));
    CHECK(poincare_by_enumeration(Partition({1, 1})) == Polynomial({1, 1}));
    CHECK(poincare_by_enumeration(Partition{}) == Polynomial::constant(1));
}

TEST_CASE("corner recursion") {
    CHECK(poincare_by_recursion(Partition({2, 2, 1})) == Polynomial({5, 11, 9, 4, 1}));
    for (int s = 2; s <= 6; ++s)
        CHECK(poincare_by_recursion(Partition({s, 1})) == Polynomial({s, 1}));
    for (int r = 2; r <= 5; ++r) {
        std::vector<int> parts{2};
        parts.insert(parts.end(), static_cast<std::size_t>(r - 1), 1);
        std::vector<mpz_class> coeffs;
        for (int p = 0; p <= r - 1; ++p) coeffs.emplace_back(r - p);
        CHECK(poincare_by_recursion(Partition(parts)) ==
              q_factorial(r - 1) * Polynomial(coeffs));
    }
    CHECK(poincare_by_recursion(Partition{}) == Polynomial::constant(1));
}

TEST_CASE("corners") {
    const auto cs = corners(Partition({2, 2, 1}));
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == Corner{1, 1, 2});
    CHECK(cs[1] == Corner{2, 0, 1});
    CHECK(remove_corner(Partition({2, 2, 1}), cs[0]) == Partition({2, 1, 1}));
    CHECK(remove_corner(Partition({2, 2, 1}), cs[1]) == Partition({2, 2}));
    CHECK(corners(Partition({5})).size() == 1);
    CHECK(corners(Partition{}).empty());
}

TEST_CASE("minimal class distribution") {
    CHECK(poincare_min_class(Partition({2, 2, 1})) == Polynomial({1, 3, 4, 3, 1}));
    CHECK(poincare_min_class(Partition({1, 1, 1, 1, 1})) == q_factorial(5));
    CHECK(poincare_min_class(Partition({7})) == Polynomial::constant(1));

    SUBCASE("equals the per-class polynomial of the minimum and is palindromic") {
        for (int n = 0; n <= 7; ++n) {
            for (const Partition& shape : partitions_of(n)) {
                const Polynomial p = poincare_min_class(shape);
                CHECK(p == poincare_of_class(min_standard_tableau(shape)));
                CHECK(p.is_palindromic());
                CHECK(p.degree() == springer_dimension(shape));
            }
        }
    }
}

TEST_CASE("three methods agree on every shape with n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            const Polynomial by_enum = poincare_by_enumeration(shape);
            CHECK(by_enum == poincare_by_class_sum(shape));
            CHECK(by_enum == poincare_by_recursion(shape));
        }
    }
}

TEST_CASE("three methods agree on some larger shapes") {
    for (const Partition& shape : {Partition({6, 6}), Partition({4, 4, 4}),
                                   Partition({3, 3, 3, 3}), Partition({5, 4, 3})}) {
        const Polynomial by_rec = poincare_by_recursion(shape);
        CHECK(by_rec == poincare_by_class_sum(shape));
        CHECK(by_rec == poincare_by_enumeration(shape));
    }
}

namespace {

// product-of-hooks count of standard tableaux; an independent route to the
// constant coefficient usable far beyond enumeration range
mpz_class hook_count(const Partition& shape) {
    const Partition cols = shape.conjugate();
    mpz_class product = 1;
    for (int p = 0; p < shape.rows(); ++p)
        for (int c = 0; c < shape.part(p); ++c)
            product *= (shape.part(p) - 1 - c) + (cols.part(c) - 1 - p) + 1;
    mpz_class total;
    mpz_fac_ui(total.get_mpz_t(), static_cast<unsigned long>(shape.n()));
    mpz_class count = total / product;
    CHECK(count * product == total);
    return count;
}

} // namespace

TEST_CASE("recursion checks out on big shapes against closed counts") {
    CHECK(hook_count(Partition({2, 2, 1})) == 5); // oracle sanity
    CHECK(hook_count(Partition({4, 3, 2, 1})) == 768);
    for (const Partition& shape :
         {Partition({9, 8, 7, 6, 5}), Partition({5, 5, 5, 5, 5}),
          Partition({8, 7, 6, 5, 4, 3, 2, 1}), Partition({12, 10, 2, 1}),
          Partition(std::vector<int>(15, 1))}) {
        const Polynomial chi = poincare_by_recursion(shape);
        CHECK(chi.value_at_one() == row_standard_count(shape));
        CHECK(chi.degree() == springer_dimension(shape));
        CHECK(chi.coeff(chi.degree()) == 1);
        CHECK(chi.coeff(0) == hook_count(shape));
    }
}

TEST_CASE("structural identities, n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            const Polynomial chi = poincare_by_recursion(shape);
            CHECK(chi.value_at_one() == row_standard_count(shape));
            CHECK(chi.degree() == springer_dimension(shape));
            CHECK(chi.coeff(chi.degree()) == 1);
            CHECK(chi.coeff(0) == mpz_class(all_standard(shape).size()));
        }
    }
}

TEST_CASE("conjecture check: only the minimal class reaches full degree, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            const auto tmin = min_standard_tableau(shape);
            const std::int64_t d = springer_dimension(shape);
            for (const StandardTableau& t : all_standard(shape)) {
                const bool full = poincare_of_class(t).degree() == d;
                CHECK(full == (t == tmin));
            }
        }
    }
}

TEST_CASE("betti tables") {
    const BettiTable table = betti_numbers(Partition({2, 2, 1}));
    CHECK(table.dim == 4);
    CHECK(table.betti == std::vector<mpz_class>({1, 4, 9, 11, 5}));
    CHECK(table.num_standard == 5);
    CHECK(table.num_row_standard == 30);
    CHECK(table.agreement);

    const BettiTable flags = betti_numbers(Partition({1, 1, 1}), Method::product_sum);
    CHECK(flags.betti == std::vector<mpz_class>({1, 2, 2, 1}));

    const BettiTable empty = betti_numbers(Partition{});
    CHECK(empty.dim == 0);
    CHECK(empty.betti == std::vector<mpz_class>({1}));

    for (const Partition& shape : partitions_of(6))
        CHECK(betti_numbers(shape, Method::all).betti.back() ==
              mpz_class(all_standard(shape).size()));
}

TEST_CASE("method names") {
    CHECK(method_from_string("all") == Method::all);
    CHECK(method_from_string("product-sum") == Method::product_sum);
    CHECK(method_name(Method::enumeration) == "enumeration");
    CHECK_THROWS_AS(method_from_string("fast"), parse_error);
}

TEST_CASE("closed forms match the engine") {
    for (int n = 0; n <= 7; ++n) {
        CHECK(closed_form(ClosedFormFamily::single_row, {n}) ==
              poincare_by_recursion(n == 0 ? Partition{} : Partition({n})));
        CHECK(closed_form(ClosedFormFamily::column, {n}) ==
              poincare_by_recursion(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));
    }
    for (int s = 1; s <= 6; ++s)
        CHECK(closed_form(ClosedFormFamily::row_plus_box, {s}) ==
              poincare_by_recursion(Partition({s, 1})));
    for (int r = 1; r <= 5; ++r) {
        std::vector<int> parts{2};
        parts.insert(parts.end(), static_cast<std::size_t>(r - 1), 1);
        CHECK(closed_form(ClosedFormFamily::two_column_hook, {r}) ==
              poincare_by_recursion(Partition(parts)));
    }
    for (int s = 2; s <= 5; ++s) {
        for (int r = 1; r <= 4; ++r) {
            std::vector<int> parts{s};
            parts.insert(parts.end(), static_cast<std::size_t>(r - 1), 1);
            CHECK(closed_form(ClosedFormFamily::hook, {s, r}) ==
                  poincare_by_recursion(Partition(parts)));
        }
    }
    for (int s = 1; s <= 5; ++s) {
        for (int t = 0; t <= s; ++t) {
            const Partition shape = t == 0 ? Partition({s}) : Partition({s, t});
            CHECK(closed_form(ClosedFormFamily::two_row, {s, t}) ==
                  poincare_by_recursion(shape));
        }
    }
    CHECK(closed_form(ClosedFormFamily::two_row, {3, 2}) == Polynomial({5, 4, 1}));
    CHECK(closed_form(ClosedFormFamily::hook, {2, 2}) == Polynomial({2, 1}));
    CHECK_THROWS_AS(closed_form(ClosedFormFamily::hook, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(closed_form(ClosedFormFamily::two_row, {2, 3}), std::invalid_argument);
}

TEST_CASE("reports") {
    const BettiTable table = betti_numbers(Partition({2, 2, 1}));
    const auto json = betti_report_json(table);
    CHECK(json["shape"] == nlohmann::json({2, 2, 1}));
    CHECK(json["n"] == 5);
    CHECK(json["dim"] == 4);
    CHECK(json["betti"] == nlohmann::json({1, 4, 9, 11, 5}));
    CHECK(json["poincare_by_codim"] == nlohmann::json({5, 11, 9, 4, 1}));
    CHECK(json["num_standard"] == 5);
    CHECK(json["num_row_standard"] == "30");
    CHECK(json["agreement"] == true);

    const std::string text = betti_report_text(table);
    CHECK(text.find("betti: 1 4 9 11 5") != std::string::npos);
    CHECK(text.find("poincare (by codim): 5+11x+9x^2+4x^3+x^4") != std::string::npos);

    CHECK(betti_csv_row(table) == "5,\"2,2,1\",4,\"1 4 9 11 5\",5,30,true");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "springer/errors.hpp"
#include "springer/rho.hpp"

using namespace springer;

TEST_CASE("interval chain validation") {
    CHECK_NOTHROW(IntervalChain::parse("2-2;1-2;1-3;0-3"));
    CHECK_NOTHROW(IntervalChain::prefix(4));
    CHECK_NOTHROW(IntervalChain::suffix(4));
    CHECK(IntervalChain::prefix(3).to_string() == "0-0;0-1;0-2;0-3");
    CHECK(IntervalChain::suffix(3).to_string() == "3-3;2-3;1-3;0-3");

    CHECK_THROWS_AS(IntervalChain::parse("0-0;0-2"), parse_error);       // width jump
    CHECK_THROWS_AS(IntervalChain::parse("1-1;0-1;1-2"), parse_error);   // left endpoint grows
    CHECK_THROWS_AS(IntervalChain::parse("0-0;0-1;0-1"), parse_error);   // width stuck
    CHECK_THROWS_AS(IntervalChain::parse("0-1"), parse_error);           // k=0 pair has width 1
    CHECK_THROWS_AS(IntervalChain::parse(""), parse_error);
    CHECK_THROWS_AS(IntervalChain::parse("0-0;x-1"), parse_error);

    SUBCASE("violation reports name the index") {
        try {
            IntervalChain::parse("0-0;0-1;0-3");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(std::string(e.what()).find("pair 2") != std::string::npos);
        }
    }
}

TEST_CASE("reflection") {
    CHECK(IntervalChain::prefix(5).reflected() == IntervalChain::suffix(5));
    CHECK(IntervalChain::suffix(5).reflected() == IntervalChain::prefix(5));

    SUBCASE("involution over all chains with n <= 5") {
        for (int n = 0; n <= 5; ++n)
            for (const IntervalChain& chain : all_interval_chains(n))
                CHECK(chain.reflected().reflected() == chain);
    }

    SUBCASE("midpoint chain for n = 4: pairs with n-k even satisfy lo = n - hi") {
        // lo_k = ceil((n-k)/2); width parity rules out a chain fixed at every index
        const auto mid = IntervalChain::parse("2-2;2-3;1-3;1-4;0-4");
        const auto reflected = mid.reflected();
        CHECK(reflected == IntervalChain::parse("2-2;1-2;1-3;0-3;0-4"));
        for (int k = 0; k <= 4; ++k) {
            const bool fixed_pair = reflected.lo(k) == mid.lo(k) && reflected.hi(k) == mid.hi(k);
            CHECK(fixed_pair == ((4 - k) % 2 == 0));
            CHECK(fixed_pair == (mid.lo(k) == 4 - mid.hi(k)));
        }
    }
}

TEST_CASE("chain generation counts are stable") {
    // no closed formula asserted; these are frozen regression values
    const std::vector<std::size_t> expected{1, 2, 4, 8, 16, 32};
    for (int n = 0; n <= 5; ++n) {
        const auto chains = all_interval_chains(n);
        CHECK(chains.size() == expected[static_cast<std::size_t>(n)]);
        std::set<std::string> keys;
        for (const auto& c : chains) keys.insert(c.to_string());
        CHECK(keys.size() == chains.size());
    }
}

TEST_CASE("skew tableau construction") {
    CHECK_NOTHROW(SkewTableau(Partition({2, 1}), Partition({1}), {{2}, {1}}));
    CHECK_NOTHROW(SkewTableau(Partition({2, 1}), Partition({1}), {{1}, {2}}));
    CHECK_THROWS_AS(SkewTableau(Partition({1, 1}), Partition{}, {{2}, {1}}),
                    std::invalid_argument); // column decreasing
    CHECK_THROWS_AS(SkewTableau(Partition({1}), Partition({2}), {{}}),
                    std::invalid_argument); // inner not inside
    CHECK_THROWS_AS(SkewTableau(Partition({2}), Partition{}, {{2, 2}}),
                    std::invalid_argument); // duplicate entries

    const auto skew = SkewTableau::between(StandardTableau::parse("1,4/2,5/3"), 2, 5);
    CHECK(skew.outer() == Partition({2, 2, 1}));
    CHECK(skew.inner() == Partition({1, 1}));
    CHECK(skew.cell_count() == 3);
}

TEST_CASE("rectification") {
    const SkewTableau two_cell(Partition({2, 1}), Partition({1}), {{2}, {1}});
    CHECK(jdt_rectify(two_cell).to_string() == "1,2");

    const auto straight = StandardTableau::parse("1,3/2,4");
    CHECK(jdt_rectify(SkewTableau::between(straight, 0, 4)) == straight);

    // entries keep their relative order under relabeling
    const SkewTableau wide(Partition({3, 2}), Partition({1}), {{40, 51}, {17, 46}});
    CHECK(jdt_rectify(wide).shape().n() == 4);

    SUBCASE("slide order does not matter") {
        std::mt19937 rng(20240817);
        for (const StandardTableau& t : all_standard(Partition({3, 2, 1}))) {
            for (int lo = 0; lo <= 6; ++lo) {
                for (int hi = lo; hi <= 6; ++hi) {
                    const auto skew = SkewTableau::between(t, lo, hi);
                    const auto fixed = skew.rectified();
                    for (int trial = 0; trial < 5; ++trial) {
                        const auto random = skew.rectified([&](int count) {
                            return std::uniform_int_distribution<int>(0, count - 1)(rng);
                        });
                        CHECK(random.outer() == fixed.outer());
                        CHECK(random.rows() == fixed.rows());
                    }
                }
            }
        }
    }
}

TEST_CASE("relabeling by the prefix chain is the identity") {
    for (int n = 0; n <= 5; ++n) {
        const auto chain = IntervalChain::prefix(n);
        for (const Partition& shape : partitions_of(n))
            for (const StandardTableau& t : all_standard(shape))
                CHECK(relabel_tableau(t, chain) == t);
    }
}

TEST_CASE("single-row tableaux relabel to themselves under any chain") {
    const auto t = StandardTableau::parse("1,2,3,4");
    for (const IntervalChain& chain : all_interval_chains(4))
        CHECK(relabel_tableau(t, chain) == t);
}

TEST_CASE("frozen suffix-chain table for shape (2,2,1)") {
    const std::map<std::string, std::string> expected{
        {"1,2/3,4/5", "1,3/2,5/4"},
        {"1,2/3,5/4", "1,2/3,5/4"},
        {"1,3/2,4/5", "1,4/2,5/3"},
        {"1,3/2,5/4", "1,2/3,4/5"},
        {"1,4/2,5/3", "1,3/2,4/5"},
    };
    std::map<std::string, std::string> got;
    for (const auto& [t, s] : relabel_table(Partition({2, 2, 1}), IntervalChain::suffix(5)))
        got[t.to_string()] = s.to_string();
    CHECK(got == expected);
}

TEST_CASE("relabeling is a bijection for every chain, n <= 4") {
    for (int n = 0; n <= 4; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            const auto all = all_standard(shape);
            for (const IntervalChain& chain : all_interval_chains(n)) {
                std::set<std::string> images;
                for (const StandardTableau& t : all) {
                    const StandardTableau s = relabel_tableau(t, chain);
                    CHECK(s.shape() == shape);
                    images.insert(s.to_string());
                }
                CHECK(images.size() == all.size());
            }
        }
    }
}

TEST_CASE("size mismatch is rejected") {
    CHECK_THROWS_AS(relabel_tableau(StandardTableau::parse("1,2"), IntervalChain::prefix(3)),
                    std::invalid_argument);
}

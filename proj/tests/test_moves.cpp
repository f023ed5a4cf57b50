#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "springer/errors.hpp"
#include "springer/moves.hpp"

using namespace springer;

TEST_CASE("move applicability") {
    CHECK(can_move(RowStandardTableau::parse("3,4/1,2/5"), 2));
    CHECK_FALSE(can_move(RowStandardTableau::parse("1,2/3,4/5"), 1)); // first row
    CHECK(can_move(RowStandardTableau::parse("1,2/3,4/5"), 4));
    CHECK_THROWS_AS(can_move(RowStandardTableau::parse("1,2/3"), 7), std::invalid_argument);
}

TEST_CASE("applying moves") {
    CHECK(apply_move(RowStandardTableau::parse("3,4/1,2/5"), 2).to_string() == "1,2/3,4/5");
    CHECK(apply_move(RowStandardTableau::parse("1,2/3,4/5"), 4).to_string() == "3,4/1,2/5");
    CHECK_THROWS_AS(apply_move(RowStandardTableau::parse("1,2/3,4/5"), 1),
                    std::invalid_argument);

    SUBCASE("a move and its partner move undo each other") {
        for (const RowStandardTableau& t : all_row_standard(Partition({3, 2, 1}))) {
            for (int i = 1; i <= t.n(); ++i) {
                if (!can_move(t, i)) continue;
                const int j = t.entry(t.row_of(i) - 1, t.col_of(i));
                const RowStandardTableau moved = apply_move(t, i);
                CHECK(can_move(moved, j));
                CHECK(apply_move(moved, j) == t);
            }
        }
    }
}

TEST_CASE("each move changes the inversion count by one") {
    for (int n = 0; n <= 5; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            for (const RowStandardTableau& t : all_row_standard(shape)) {
                const auto inv = inversions(t);
                for (int i = 1; i <= n; ++i) {
                    if (!can_move(t, i)) continue;
                    const int j = t.entry(t.row_of(i) - 1, t.col_of(i));
                    const InversionPair pair{std::min(i, j), std::max(i, j)};
                    const bool was_inverted =
                        std::binary_search(inv.begin(), inv.end(), pair);
                    const int after = inversion_count(apply_move(t, i));
                    CHECK(after == inversion_count(t) + (was_inverted ? -1 : 1));
                }
            }
        }
    }
}

TEST_CASE("moves stay inside the standardization class") {
    for (const RowStandardTableau& t : all_row_standard(Partition({2, 2, 1}))) {
        for (int i = 1; i <= t.n(); ++i) {
            if (!can_move(t, i)) continue;
            CHECK(standardize(apply_move(t, i)) == standardize(t));
        }
    }
}

TEST_CASE("move graph of (2,2,1)") {
    const MoveGraph g = MoveGraph::build(Partition({2, 2, 1}));
    CHECK(g.vertex_count() == 30);
    CHECK(g.component_count() == 5);
    auto sizes = g.component_sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>({2, 4, 4, 8, 12}));

    SUBCASE("one standard tableau per component") {
        std::vector<int> standard_per_component(5, 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (inversion_count(g.vertex(v)) == 0)
                standard_per_component[static_cast<std::size_t>(g.component_of(v))]++;
        CHECK(standard_per_component == std::vector<int>({1, 1, 1, 1, 1}));
    }

    SUBCASE("components group by standardization") {
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int w = 0; w < g.vertex_count(); ++w)
                CHECK((g.component_of(v) == g.component_of(w)) ==
                      (standardize(g.vertex(v)) == standardize(g.vertex(w))));
    }

    SUBCASE("adjacency is symmetric with no duplicate edges") {
        int directed = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::set<int> targets;
            for (const MoveGraph::Edge& e : g.neighbors(v)) {
                CHECK(targets.insert(e.to).second);
                bool back = false;
                for (const MoveGraph::Edge& r : g.neighbors(e.to))
                    if (r.to == v) back = true;
                CHECK(back);
                ++directed;
            }
        }
        CHECK(directed == 2 * g.edge_count());
    }
}

TEST_CASE("small graphs") {
    const MoveGraph single = MoveGraph::build(Partition({4}));
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    const MoveGraph pair = MoveGraph::build(Partition({1, 1}));
    CHECK(pair.vertex_count() == 2);
    CHECK(pair.edge_count() == 1);
    CHECK(pair.component_count() == 1);

    CHECK_THROWS_AS(MoveGraph::build(Partition({2, 2, 1}), 10), resource_limit_error);
}

TEST_CASE("geodesics") {
    CHECK(geodesic_to_standard(RowStandardTableau::parse("1,2/3,4/5")) == 0);
    CHECK(geodesic_to_standard(RowStandardTableau::parse("3,4/1,2/5")) == 1);
    CHECK(geodesic_to_standard(RowStandardTableau::parse("2,5/3,4/1")) == 4);

    SUBCASE("geodesic equals the inversion count, n <= 5") {
        for (int n = 0; n <= 5; ++n) {
            for (const Partition& shape : partitions_of(n)) {
                const MoveGraph g = MoveGraph::build(shape);
                for (int v = 0; v < g.vertex_count(); ++v)
                    CHECK(geodesic_to_standard(g, g.vertex(v)) ==
                          inversion_count(g.vertex(v)));
            }
        }
    }
}

TEST_CASE("greedy reduction") {
    CHECK(greedy_reduction(RowStandardTableau::parse("1,3/2,4")).empty());
    CHECK(greedy_reduction(RowStandardTableau::parse("3,4/1,2/5")).size() == 1);

    SUBCASE("length equals the inversion count and replay reaches the target") {
        for (int n = 0; n <= 5; ++n) {
            for (const Partition& shape : partitions_of(n)) {
                for (const RowStandardTableau& t : all_row_standard(shape)) {
                    const auto seq = greedy_reduction(t);
                    CHECK(static_cast<int>(seq.size()) == inversion_count(t));
                    RowStandardTableau cur = t;
                    for (int i : seq) cur = apply_move(cur, i);
                    CHECK(cur == standardize(t).tableau());
                }
            }
        }
    }
}

TEST_CASE("dot export") {
    const MoveGraph g = MoveGraph::build(Partition({1, 1}));
    const std::string dot = to_dot(g);
    CHECK(dot.find("graph moves {") == 0);
    CHECK(dot.find("subgraph cluster_0") != std::string::npos);
    CHECK(dot.find("1/2\\ninv=0") != std::string::npos);
    CHECK(dot.find("2/1\\ninv=1") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
    CHECK(to_dot(MoveGraph::build(Partition({1, 1}))) == dot); // deterministic

    const std::string big = to_dot(MoveGraph::build(Partition({2, 2, 1})));
    int nodes = 0, edges = 0;
    for (std::size_t pos = 0; (pos = big.find("[label=\"", pos)) != std::string::npos; ++pos) ++nodes;
    for (std::size_t pos = 0; (pos = big.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(nodes - edges == 30); // node labels + edge labels, edges counted separately
    CHECK(edges == MoveGraph::build(Partition({2, 2, 1})).edge_count());
}

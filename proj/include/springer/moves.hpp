#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "springer/tableau.hpp"

namespace springer {

// true iff the elementary move at entry i applies to t:
//   1. i is not in the first row (let j be the entry directly above);
//   2. if i has a right neighbor i' then j < i'; if j has a right neighbor j'
//      then i < j';
//   3. every k in the column strictly between min(i,j) and max(i,j) forms an
//      inversion with exactly one of the two.
// Throws std::invalid_argument when i is outside 1..n.
bool can_move(const RowStandardTableau& t, int i);

// Swap the length-q row prefixes of i's row and the row above, q = column of i.
// Throws std::invalid_argument when can_move(t, i) is false.
RowStandardTableau apply_move(const RowStandardTableau& t, int i);

// All row-standard tableaux of one shape, with an edge {t, apply_move(t, i)}
// for every applicable i. Immutable once built.
class MoveGraph {
public:
    struct Edge {
        int to = 0;
        int label = 0; // the entry whose move realizes this direction
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    static MoveGraph build(const Partition& shape,
                           std::uint64_t cap = kDefaultEnumerationCap);

    const Partition& shape() const { return shape_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<RowStandardTableau>& vertices() const { return vertices_; }
    const RowStandardTableau& vertex(int v) const {
        return vertices_[static_cast<std::size_t>(v)];
    }
    // index of a tableau in enumeration order, -1 if not of this shape
    int index_of(const RowStandardTableau& t) const;

    const std::vector<Edge>& neighbors(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    int edge_count() const { return edge_count_; }

    int component_count() const { return component_count_; }
    int component_of(int v) const { return component_[static_cast<std::size_t>(v)]; }
    std::vector<int> component_sizes() const;

    // BFS distances from v; unreachable vertices get -1. Neighbors expand in
    // increasing label order so witness paths are reproducible.
    std::vector<int> bfs_distances(int v) const;

private:
    Partition shape_;
    std::vector<RowStandardTableau> vertices_; // enumeration order
    std::vector<int> order_;                   // vertex ids sorted by tableau
    std::vector<std::vector<Edge>> adj_;
    std::vector<int> component_;
    int component_count_ = 0;
    int edge_count_ = 0;
};

// BFS distance from t to standardize(t) in the move graph of its shape.
int geodesic_to_standard(const RowStandardTableau& t,
                         std::uint64_t cap = kDefaultEnumerationCap);
int geodesic_to_standard(const MoveGraph& graph, const RowStandardTableau& t);

// Entry sequence i_1,...,i_m whose moves take t to standardize(t), built by
// repeatedly moving the largest misplaced entry down past its below neighbor.
// m equals the inversion count.
std::vector<int> greedy_reduction(const RowStandardTableau& t);

// DOT rendering: one cluster per component, vertex labels carry the canonical
// string and the inversion count, edge label "i|j" gives the move entries of
// the two directions (smaller vertex index first).
std::string to_dot(const MoveGraph& graph);

} // namespace springer

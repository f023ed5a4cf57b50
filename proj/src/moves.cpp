#include "springer/moves.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

namespace {

bool is_inversion_of(const std::vector<InversionPair>& inv, int i, int j) {
    return std::binary_search(inv.begin(), inv.end(), InversionPair{i, j});
}

bool can_move_with(const RowStandardTableau& t, int i, const std::vector<InversionPair>& inv) {
    const int row = t.row_of(i);
    if (row == 0) return false;
    const int col = t.col_of(i);
    const int j = t.entry(row - 1, col);
    if (t.has_right_neighbor(i) && j > t.right_neighbor(i)) return false;
    if (t.has_right_neighbor(j) && i > t.right_neighbor(j)) return false;
    const int lo = std::min(i, j), hi = std::max(i, j);
    const int col_len = t.shape().conjugate().part(col);
    for (int p = 0; p < col_len; ++p) {
        const int k = t.entry(p, col);
        if (k <= lo || k >= hi) continue;
        if (is_inversion_of(inv, lo, k) == is_inversion_of(inv, k, hi)) return false;
    }
    return true;
}

} // namespace

bool can_move(const RowStandardTableau& t, int i) {
    if (i < 1 || i > t.n())
        throw std::invalid_argument("entry " + std::to_string(i) + " outside 1.." +
                                    std::to_string(t.n()));
    return can_move_with(t, i, inversions(t));
}

RowStandardTableau apply_move(const RowStandardTableau& t, int i) {
    if (!can_move(t, i))
        throw std::invalid_argument("move at entry " + std::to_string(i) +
                                    " does not apply to " + t.to_string());
    const int row = t.row_of(i);
    const int col = t.col_of(i);
    auto rows = t.rows();
    for (int c = 0; c <= col; ++c)
        std::swap(rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)],
                  rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(c)]);
    return RowStandardTableau(std::move(rows));
}

MoveGraph MoveGraph::build(const Partition& shape, std::uint64_t cap) {
    MoveGraph g;
    g.shape_ = shape;
    g.vertices_ = all_row_standard(shape, cap);
    g.order_.resize(g.vertices_.size());
    for (int v = 0; v < g.vertex_count(); ++v) g.order_[static_cast<std::size_t>(v)] = v;
    std::sort(g.order_.begin(), g.order_.end(), [&](int a, int b) {
        return g.vertices_[static_cast<std::size_t>(a)] < g.vertices_[static_cast<std::size_t>(b)];
    });

    g.adj_.resize(g.vertices_.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const RowStandardTableau& t = g.vertex(v);
        const auto inv = inversions(t);
        for (int i = 1; i <= t.n(); ++i) {
            if (!can_move_with(t, i, inv)) continue;
            const int row = t.row_of(i);
            const int col = t.col_of(i);
            auto rows = t.rows();
            for (int c = 0; c <= col; ++c)
                std::swap(rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)],
                          rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(c)]);
            const int w = g.index_of(RowStandardTableau(std::move(rows)));
            if (w < 0)
                throw cross_check_error("move landed outside the vertex set of shape " +
                                        shape.to_string());
            g.adj_[static_cast<std::size_t>(v)].push_back({w, i});
        }
        std::sort(g.adj_[static_cast<std::size_t>(v)].begin(),
                  g.adj_[static_cast<std::size_t>(v)].end(),
                  [](const Edge& a, const Edge& b) { return a.label < b.label; });
    }

    // components by BFS over the undirected edge set
    g.component_.assign(g.vertices_.size(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.component_[static_cast<std::size_t>(v)] != -1) continue;
        const int id = g.component_count_++;
        std::deque<int> queue{v};
        g.component_[static_cast<std::size_t>(v)] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const Edge& e : g.neighbors(u)) {
                if (g.component_[static_cast<std::size_t>(e.to)] == -1) {
                    g.component_[static_cast<std::size_t>(e.to)] = id;
                    queue.push_back(e.to);
                }
            }
        }
    }

    int directed = 0;
    for (const auto& list : g.adj_) directed += static_cast<int>(list.size());
    if (directed % 2 != 0)
        throw cross_check_error("move edges of shape " + shape.to_string() +
                                " do not pair up symmetrically");
    g.edge_count_ = directed / 2;
    return g;
}

int MoveGraph::index_of(const RowStandardTableau& t) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), t, [&](int v, const RowStandardTableau& x) {
        return vertices_[static_cast<std::size_t>(v)] < x;
    });
    if (it == order_.end() || vertices_[static_cast<std::size_t>(*it)] != t) return -1;
    return *it;
}

std::vector<int> MoveGraph::component_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(component_count_), 0);
    for (int c : component_) sizes[static_cast<std::size_t>(c)]++;
    return sizes;
}

std::vector<int> MoveGraph::bfs_distances(int v) const {
    std::vector<int> dist(vertices_.size(), -1);
    dist[static_cast<std::size_t>(v)] = 0;
    std::deque<int> queue{v};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const Edge& e : neighbors(u)) {
            if (dist[static_cast<std::size_t>(e.to)] == -1) {
                dist[static_cast<std::size_t>(e.to)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(e.to);
            }
        }
    }
    return dist;
}

int geodesic_to_standard(const RowStandardTableau& t, std::uint64_t cap) {
    return geodesic_to_standard(MoveGraph::build(t.shape(), cap), t);
}

int geodesic_to_standard(const MoveGraph& graph, const RowStandardTableau& t) {
    const int from = graph.index_of(t);
    const int to = graph.index_of(standardize(t).tableau());
    if (from < 0 || to < 0)
        throw std::invalid_argument("tableau " + t.to_string() + " is not a vertex of the graph");
    const int d = graph.bfs_distances(from)[static_cast<std::size_t>(to)];
    if (d < 0)
        throw cross_check_error("standardization of " + t.to_string() +
                                " is unreachable in the move graph");
    return d;
}

std::vector<int> greedy_reduction(const RowStandardTableau& t) {
    std::vector<int> sequence;
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
        // the below neighbor of the largest misplaced entry; it exists and
        // its move pulls m one row down
        const int below_row = cur.row_of(m) + 1;
        if (below_row >= cur.shape().rows() || cur.shape().part(below_row) <= cur.col_of(m))
            throw cross_check_error("misplaced entry " + std::to_string(m) + " of " +
                                    cur.to_string() + " has no below neighbor");
        const int below = cur.entry(below_row, cur.col_of(m));
        sequence.push_back(below);
        cur = apply_move(cur, below);
    }
    return sequence;
}

std::string to_dot(const MoveGraph& graph) {
    std::ostringstream out;
    out << "graph moves {\n";
    out << "  // shape " << graph.shape().to_string() << ", " << graph.vertex_count()
        << " vertices, " << graph.edge_count() << " edges\n";
    out << "  node [shape=box];\n";
    for (int c = 0; c < graph.component_count(); ++c) {
        out << "  subgraph cluster_" << c << " {\n";
        out << "    label=\"component " << c << "\";\n";
        for (int v = 0; v < graph.vertex_count(); ++v) {
            if (graph.component_of(v) != c) continue;
            out << "    v" << v << " [label=\"" << graph.vertex(v).to_string() << "\\ninv="
                << inversion_count(graph.vertex(v)) << "\"];\n";
        }
        out << "  }\n";
    }
    for (int v = 0; v < graph.vertex_count(); ++v) {
        for (const MoveGraph::Edge& e : graph.neighbors(v)) {
            if (e.to < v) continue; // one line per unordered edge
            int back = 0;
            for (const MoveGraph::Edge& r : graph.neighbors(e.to))
                if (r.to == v) back = r.label;
            out << "  v" << v << " -- v" << e.to << " [label=\"" << e.label << "|" << back
                << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace springer

#pragma once

#include <initializer_list>
#include <vector>

#include "prlocal/exact.hpp"
#include "prlocal/graph.hpp"

namespace prlocal::testing {

inline DirectedGraph make_graph(NodeId n, std::initializer_list<Edge> edges) {
    std::vector<Edge> v(edges);
    return DirectedGraph::from_edges(n, v);
}

inline DirectedGraph two_cycle() { return make_graph(2, {{0, 1}, {1, 0}}); }
inline DirectedGraph self_loop() { return make_graph(1, {{0, 0}}); }
// a -> b -> c, c self-loops
inline DirectedGraph three_chain() { return make_graph(3, {{0, 1}, {1, 2}, {2, 2}}); }

// Independent ground-truth route used to cross-check the iterative exact
// oracle: solve the PageRank recursion directly as a dense linear system by
// Gaussian elimination.
inline std::vector<double> solve_linear(std::vector<std::vector<double>> a,
                                        std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0.0) continue;
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// pi(v) = sum over in-neighbors u of (1-alpha) pi(u) / d_out(u) + alpha/n.
inline std::vector<double> dense_pagerank(const DirectedGraph& g, double alpha) {
    const NodeId n = g.num_nodes();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    std::vector<double> b(n, alpha / n);
    for (NodeId v = 0; v < n; ++v) a[v][v] = 1.0;
    for (NodeId u = 0; u < n; ++u) {
        const auto nbrs = g.out_neighbors(u);
        for (NodeId w : nbrs) a[w][u] -= (1.0 - alpha) / static_cast<double>(nbrs.size());
    }
    return solve_linear(std::move(a), std::move(b));
}

// pi(v,t) = alpha [v==t] + (1-alpha)/d_out(v) * sum over out-neighbors w of pi(w,t).
inline std::vector<double> dense_contributions(const DirectedGraph& g, double alpha, NodeId t) {
    const NodeId n = g.num_nodes();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    std::vector<double> b(n, 0.0);
    b[t] = alpha;
    for (NodeId v = 0; v < n; ++v) {
        a[v][v] += 1.0;
        const auto nbrs = g.out_neighbors(v);
        for (NodeId w : nbrs) a[v][w] -= (1.0 - alpha) / static_cast<double>(nbrs.size());
    }
    return solve_linear(std::move(a), std::move(b));
}

}  // namespace prlocal::testing

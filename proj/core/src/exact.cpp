#include "prlocal/exact.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace prlocal {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
}

// One step of the non-terminating walk distribution: x'[v] = sum over
// in-neighbors u of x[u]/d_out(u), implemented as a scatter along out-edges.
void walk_step(const DirectedGraph& g, const std::vector<double>& x, std::vector<double>& out) {
    out.assign(x.size(), 0.0);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        if (x[u] == 0.0) continue;
        const auto nbrs = g.out_neighbors(u);
        const double share = x[u] / static_cast<double>(nbrs.size());
        for (NodeId w : nbrs) out[w] += share;
    }
}

}  // namespace

ScoreVector exact_pagerank(const DirectedGraph& g, double alpha, double tol) {
    check_alpha(alpha);
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const NodeId n = g.num_nodes();
    std::vector<double> x(n, 1.0 / n), next;
    ScoreVector pi{std::vector<double>(n, 0.0), alpha, ScoreKind::Pagerank, -1};
    for (double w = 1.0; w >= tol; w *= (1.0 - alpha)) {
        for (NodeId v = 0; v < n; ++v) pi.values[v] += alpha * w * x[v];
        walk_step(g, x, next);
        x.swap(next);
    }
    return pi;
}

std::vector<double> hop_pagerank(const DirectedGraph& g, double alpha, NodeId t, int i_max) {
    check_alpha(alpha);
    g.check_node(t);
    if (i_max < 0) throw std::invalid_argument("i_max must be nonnegative");
    const NodeId n = g.num_nodes();
    std::vector<double> x(n, 1.0 / n), next, hops;
    hops.reserve(static_cast<std::size_t>(i_max) + 1);
    double w = 1.0;
    for (int i = 0; i <= i_max; ++i, w *= (1.0 - alpha)) {
        hops.push_back(alpha * w * x[t]);
        walk_step(g, x, next);
        x.swap(next);
    }
    return hops;
}

ScoreVector hop_distribution(const DirectedGraph& g, double alpha, int i) {
    check_alpha(alpha);
    if (i < 0) throw std::invalid_argument("hop index must be nonnegative");
    const NodeId n = g.num_nodes();
    std::vector<double> x(n, 1.0 / n), next;
    for (int k = 0; k < i; ++k) {
        walk_step(g, x, next);
        x.swap(next);
    }
    const double w = alpha * std::pow(1.0 - alpha, i);
    ScoreVector out{std::move(x), alpha, ScoreKind::Hop, i};
    for (NodeId v = 0; v < n; ++v) out.values[v] *= w;
    return out;
}

ScoreVector tail_pagerank(const DirectedGraph& g, double alpha, int i_prime, double tol) {
    check_alpha(alpha);
    if (i_prime < 0) throw std::invalid_argument("i_prime must be nonnegative");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const NodeId n = g.num_nodes();
    std::vector<double> x(n, 1.0 / n), next;
    ScoreVector tail{std::vector<double>(n, 0.0), alpha, ScoreKind::Tail, i_prime};
    int i = 0;
    for (double w = 1.0; w >= tol; w *= (1.0 - alpha), ++i) {
        if (i >= i_prime)
            for (NodeId v = 0; v < n; ++v) tail.values[v] += alpha * w * x[v];
        walk_step(g, x, next);
        x.swap(next);
    }
    return tail;
}

ScoreVector contributions_to(const DirectedGraph& g, double alpha, NodeId t, double tol) {
    check_alpha(alpha);
    g.check_node(t);
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const NodeId n = g.num_nodes();
    // q_i[v] = probability an i-step walk from v sits at t; gather backwards.
    std::vector<double> q(n, 0.0), next(n);
    q[t] = 1.0;
    ScoreVector contrib{std::vector<double>(n, 0.0), alpha, ScoreKind::ContribTo, t};
    for (double w = 1.0; w >= tol; w *= (1.0 - alpha)) {
        for (NodeId v = 0; v < n; ++v) contrib.values[v] += alpha * w * q[v];
        for (NodeId v = 0; v < n; ++v) {
            const auto nbrs = g.out_neighbors(v);
            double acc = 0.0;
            for (NodeId u : nbrs) acc += q[u];
            next[v] = acc / static_cast<double>(nbrs.size());
        }
        q.swap(next);
    }
    return contrib;
}

std::string scores_csv_string(const ScoreVector& scores) {
    std::ostringstream out;
    out << "node,value\n";
    out.precision(17);
    for (NodeId v = 0; v < scores.size(); ++v) out << v << ',' << scores.values[v] << '\n';
    return out.str();
}

void write_scores_csv(const ScoreVector& scores, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << scores_csv_string(scores);
}

}  // namespace prlocal

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "prlocal/graph.hpp"

namespace prlocal {

enum class ScoreKind { Pagerank, Hop, Tail, PprFrom, ContribTo };

// Dense per-node score vector produced by the exact routines below. `param`
// carries the hop index, tail start, source, or target, depending on kind.
struct ScoreVector {
    std::vector<double> values;
    double alpha = 0.0;
    ScoreKind kind = ScoreKind::Pagerank;
    std::int64_t param = -1;

    double operator[](NodeId v) const { return values[v]; }
    NodeId size() const { return static_cast<NodeId>(values.size()); }
};

// Ground truth for tests and verification; not query-limited and therefore
// never used inside a measured estimator. All routines evaluate the
// geometric walk series and truncate once (1-alpha)^i < tol.

// PageRank: probability that a walk from a uniform start, terminating with
// probability alpha per step, ends at each node.
ScoreVector exact_pagerank(const DirectedGraph& g, double alpha, double tol = 1e-12);

// i-hop PageRank of a fixed target, for i = 0..i_max.
std::vector<double> hop_pagerank(const DirectedGraph& g, double alpha, NodeId t, int i_max);

// Full i-hop distribution over nodes for one fixed i.
ScoreVector hop_distribution(const DirectedGraph& g, double alpha, int i);

// Tail PageRank: per-node sum of i-hop values for i >= i_prime.
ScoreVector tail_pagerank(const DirectedGraph& g, double alpha, int i_prime, double tol = 1e-12);

// Contribution of every source to t: probability a walk from s ends at t.
ScoreVector contributions_to(const DirectedGraph& g, double alpha, NodeId t, double tol = 1e-12);

void write_scores_csv(const ScoreVector& scores, const std::filesystem::path& path);
std::string scores_csv_string(const ScoreVector& scores);

}  // namespace prlocal

#pragma once

#include <cstdint>

#include "prlocal/graph.hpp"
#include "prlocal/rng.hpp"

namespace prlocal {

enum class QueryKind { InDeg, OutDeg, Parent, Child, Jump };

struct QueryCounts {
    std::uint64_t indeg = 0;
    std::uint64_t outdeg = 0;
    std::uint64_t parent = 0;
    std::uint64_t child = 0;
    std::uint64_t jump = 0;

    std::uint64_t total() const { return indeg + outdeg + parent + child + jump; }

    QueryCounts operator-(const QueryCounts& o) const {
        return {indeg - o.indeg, outdeg - o.outdeg, parent - o.parent, child - o.child,
                jump - o.jump};
    }
    friend bool operator==(const QueryCounts&, const QueryCounts&) = default;
};

// A query in reified form; index is 1-based for Parent/Child and ignored
// otherwise. Useful for recording and replaying traces.
struct Query {
    QueryKind kind;
    NodeId v = 0;
    NodeId index = 0;
};

// The only graph access available to estimation algorithms. Five unit-cost
// operations, each bumping its counter: in-degree, out-degree, i-th parent,
// i-th child, and a uniformly random node.
//
// Two independent seeded streams hang off a session: one consumed exclusively
// by jump(), so replaying a recorded query sequence reproduces outputs
// bit-for-bit, and one handed to algorithms for their own coins. Sessions are
// single-owner; run independent sessions (distinct seeds) over the same graph
// for parallelism.
class OracleSession {
  public:
    OracleSession(const DirectedGraph& g, std::uint64_t seed)
        : g_(&g),
          jump_rng_(mix_seed(seed, 0x6f72636cULL)),
          algo_rng_(mix_seed(seed, 0x616c676fULL)),
          seed_(seed) {}

    NodeId indeg(NodeId v) {
        g_->check_node(v);
        ++counts_.indeg;
        return g_->in_degree_raw(v);
    }

    NodeId outdeg(NodeId v) {
        g_->check_node(v);
        ++counts_.outdeg;
        return g_->out_degree_raw(v);
    }

    NodeId parent(NodeId v, NodeId i) {
        g_->check_node(v);
        if (i < 1 || i > g_->in_degree_raw(v))
            throw std::out_of_range("parent index " + std::to_string(i) + " out of range for node " +
                                    std::to_string(v));
        ++counts_.parent;
        return g_->in_neighbor_raw(v, i - 1);
    }

    NodeId child(NodeId v, NodeId i) {
        g_->check_node(v);
        if (i < 1 || i > g_->out_degree_raw(v))
            throw std::out_of_range("child index " + std::to_string(i) + " out of range for node " +
                                    std::to_string(v));
        ++counts_.child;
        return g_->out_neighbor_raw(v, i - 1);
    }

    NodeId jump() {
        ++counts_.jump;
        return static_cast<NodeId>(jump_rng_.below(g_->num_nodes()));
    }

    NodeId query(const Query& q) {
        switch (q.kind) {
            case QueryKind::InDeg: return indeg(q.v);
            case QueryKind::OutDeg: return outdeg(q.v);
            case QueryKind::Parent: return parent(q.v, q.index);
            case QueryKind::Child: return child(q.v, q.index);
            case QueryKind::Jump: return jump();
        }
        throw std::invalid_argument("unknown query kind");
    }

    const QueryCounts& counts() const { return counts_; }
    std::uint64_t seed() const { return seed_; }
    const DirectedGraph& graph() const { return *g_; }

    // Randomness for algorithm-side coins (walk terminations, child picks,
    // rounding). Kept separate from the jump stream, see class comment.
    Rng& algo_rng() { return algo_rng_; }

  private:
    const DirectedGraph* g_;
    QueryCounts counts_;
    Rng jump_rng_;
    Rng algo_rng_;
    std::uint64_t seed_;
};

}  // namespace prlocal

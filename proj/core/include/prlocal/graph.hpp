#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prlocal {

using NodeId = std::uint32_t;
using EdgeCount = std::uint64_t;

struct Edge {
    NodeId from;
    NodeId to;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct GraphFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
// Algorithm entry points mark their scope; while any such scope is active on
// the current thread, direct adjacency access throws. The only sanctioned
// path inside an algorithm is the query interface of OracleSession.
int& oracle_scope_depth();
inline bool oracle_scope_active() { return oracle_scope_depth() > 0; }
void require_direct_access();
}  // namespace detail

// Scope guard used by algorithm implementations.
class OracleScope {
  public:
    OracleScope() { ++detail::oracle_scope_depth(); }
    ~OracleScope() { --detail::oracle_scope_depth(); }
    OracleScope(const OracleScope&) = delete;
    OracleScope& operator=(const OracleScope&) = delete;
};

// Immutable directed multigraph with adjacency in both directions.
//
// Neighbor order is load order: the i-th parent/child of v is the i-th edge
// into/out of v as the edges were supplied. Every node must have at least one
// out-neighbor so that random walks are well defined. Parallel edges and
// self-loops are allowed; degrees count multiplicity.
class DirectedGraph {
  public:
    static DirectedGraph from_edges(NodeId n, std::span<const Edge> edges);

    NodeId num_nodes() const { return n_; }
    EdgeCount num_edges() const { return m_; }
    NodeId max_in_degree() const { return delta_in_; }
    NodeId max_out_degree() const { return delta_out_; }

    NodeId in_degree(NodeId v) const {
        detail::require_direct_access();
        return in_degree_raw(v);
    }
    NodeId out_degree(NodeId v) const {
        detail::require_direct_access();
        return out_degree_raw(v);
    }
    // i is 0-based here; the session's PARENT/CHILD queries are 1-based.
    NodeId in_neighbor(NodeId v, NodeId i) const {
        detail::require_direct_access();
        return in_adj_[in_off_[v] + i];
    }
    NodeId out_neighbor(NodeId v, NodeId i) const {
        detail::require_direct_access();
        return out_adj_[out_off_[v] + i];
    }
    std::span<const NodeId> in_neighbors(NodeId v) const {
        detail::require_direct_access();
        return {in_adj_.data() + in_off_[v], in_degree_raw(v)};
    }
    std::span<const NodeId> out_neighbors(NodeId v) const {
        detail::require_direct_access();
        return {out_adj_.data() + out_off_[v], out_degree_raw(v)};
    }

    void check_node(NodeId v) const {
        if (v >= n_) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
    }

  private:
    friend class OracleSession;

    NodeId in_degree_raw(NodeId v) const { return static_cast<NodeId>(in_off_[v + 1] - in_off_[v]); }
    NodeId out_degree_raw(NodeId v) const { return static_cast<NodeId>(out_off_[v + 1] - out_off_[v]); }
    NodeId in_neighbor_raw(NodeId v, NodeId i) const { return in_adj_[in_off_[v] + i]; }
    NodeId out_neighbor_raw(NodeId v, NodeId i) const { return out_adj_[out_off_[v] + i]; }

    NodeId n_ = 0;
    EdgeCount m_ = 0;
    NodeId delta_in_ = 0;
    NodeId delta_out_ = 0;
    std::vector<EdgeCount> out_off_, in_off_;
    std::vector<NodeId> out_adj_, in_adj_;
};

// Text format: first line "n m", then m lines "u v" (0-based decimal ids).
DirectedGraph load_edge_list(const std::filesystem::path& path);

// Canonical serialization: edges grouped by source in ascending node order,
// per-source order preserved. Loading the result reproduces the graph,
// including neighbor order.
void save_edge_list(const DirectedGraph& g, const std::filesystem::path& path);
std::string edge_list_string(const DirectedGraph& g);

}  // namespace prlocal

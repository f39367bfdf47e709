#include "prlocal/graph.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace prlocal {

namespace detail {

int& oracle_scope_depth() {
    thread_local int depth = 0;
    return depth;
}

void require_direct_access() {
    if (oracle_scope_active())
        throw std::logic_error("direct graph access inside an oracle-only scope");
}

}  // namespace detail

DirectedGraph DirectedGraph::from_edges(NodeId n, std::span<const Edge> edges) {
    if (n == 0) throw GraphFormatError("graph must have at least one node");
    DirectedGraph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.out_off_.assign(static_cast<std::size_t>(n) + 1, 0);
    g.in_off_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges) {
        if (e.from >= n || e.to >= n)
            throw GraphFormatError("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                   ") references a node outside [0," + std::to_string(n) + ")");
        ++g.out_off_[e.from + 1];
        ++g.in_off_[e.to + 1];
    }
    for (NodeId v = 0; v < n; ++v) {
        if (g.out_off_[v + 1] == 0)
            throw GraphFormatError("node " + std::to_string(v) + " has out-degree 0");
        g.delta_out_ = std::max<NodeId>(g.delta_out_, static_cast<NodeId>(g.out_off_[v + 1]));
        g.delta_in_ = std::max<NodeId>(g.delta_in_, static_cast<NodeId>(g.in_off_[v + 1]));
        g.out_off_[v + 1] += g.out_off_[v];
        g.in_off_[v + 1] += g.in_off_[v];
    }
    g.out_adj_.resize(edges.size());
    g.in_adj_.resize(edges.size());
    std::vector<EdgeCount> out_pos(g.out_off_.begin(), g.out_off_.end() - 1);
    std::vector<EdgeCount> in_pos(g.in_off_.begin(), g.in_off_.end() - 1);
    // Single pass in input order keeps per-node neighbor lists in edge order.
    for (const Edge& e : edges) {
        g.out_adj_[out_pos[e.from]++] = e.to;
        g.in_adj_[in_pos[e.to]++] = e.from;
    }
    return g;
}

DirectedGraph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw GraphFormatError("cannot open " + path.string());
    long long n_raw = 0, m_raw = 0;
    if (!(in >> n_raw >> m_raw) || n_raw <= 0 || m_raw < 0)
        throw GraphFormatError(path.string() + ": malformed header, expected \"n m\"");
    const auto n = static_cast<EdgeCount>(n_raw);
    if (n > std::numeric_limits<NodeId>::max())
        throw GraphFormatError(path.string() + ": node count exceeds supported range");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m_raw));
    for (long long i = 0; i < m_raw; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw GraphFormatError(path.string() + ": expected " + std::to_string(m_raw) +
                                   " edges, failed at edge " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n_raw || v >= n_raw)
            throw GraphFormatError(path.string() + ": edge " + std::to_string(i) + " (" +
                                   std::to_string(u) + "," + std::to_string(v) + ") out of range");
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
    std::string extra;
    if (in >> extra)
        throw GraphFormatError(path.string() + ": trailing content after " + std::to_string(m_raw) +
                               " edges");
    return DirectedGraph::from_edges(static_cast<NodeId>(n), edges);
}

std::string edge_list_string(const DirectedGraph& g) {
    std::ostringstream out;
    out << g.num_nodes() << ' ' << g.num_edges() << '\n';
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        for (NodeId u : g.out_neighbors(v)) out << v << ' ' << u << '\n';
    return out.str();
}

void save_edge_list(const DirectedGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF line endings everywhere
    if (!out) throw GraphFormatError("cannot write " + path.string());
    out << edge_list_string(g);
}

}  // namespace prlocal

#include "prlocal/synth.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "prlocal/rng.hpp"

namespace prlocal {

namespace {

std::vector<NodeId> random_permutation(NodeId n, Rng& rng) {
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    for (NodeId i = n; i > 1; --i) {
        const auto j = static_cast<NodeId>(rng.below(i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

}  // namespace

DirectedGraph random_regular(NodeId n, NodeId d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("random_regular needs n >= 1 and d >= 1");
    Rng rng(mix_seed(seed, 0x72656775ULL));
    std::vector<std::vector<NodeId>> perms;
    perms.reserve(d);
    for (NodeId k = 0; k < d; ++k) perms.push_back(random_permutation(n, rng));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * d);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId k = 0; k < d; ++k) edges.push_back({v, perms[k][v]});
    return DirectedGraph::from_edges(n, edges);
}

DirectedGraph random_mixed(NodeId n, NodeId max_out, std::uint64_t seed) {
    if (n < 1 || max_out < 1) throw std::invalid_argument("random_mixed needs n >= 1 and max_out >= 1");
    Rng rng(mix_seed(seed, 0x6d697865ULL));
    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v) {
        const auto dv = static_cast<NodeId>(rng.below(max_out)) + 1;
        for (NodeId k = 0; k < dv; ++k) edges.push_back({v, static_cast<NodeId>(rng.below(n))});
    }
    return DirectedGraph::from_edges(n, edges);
}

}  // namespace prlocal

#pragma once

#include <cstdint>

#include "prlocal/graph.hpp"

namespace prlocal {

// Union of d seeded random permutations: every node has out-degree and
// in-degree exactly d. Edges are emitted node-major, so the k-th child of v
// is the image of v under the k-th permutation. May contain self-loops and
// parallel edges.
DirectedGraph random_regular(NodeId n, NodeId d, std::uint64_t seed);

// Mixed degrees: each node draws an out-degree uniformly from [1, max_out]
// and that many uniform targets. Emitted node-major.
DirectedGraph random_mixed(NodeId n, NodeId max_out, std::uint64_t seed);

}  // namespace prlocal

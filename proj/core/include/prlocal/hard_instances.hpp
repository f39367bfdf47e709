#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "prlocal/graph.hpp"

namespace prlocal {

struct InfeasibleInstance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct HardFamilyOptions {
    // Size multipliers for the two special node sets; both asymptotic orders
    // are fixed, the constants are generator policy. The Y default is chosen
    // so the per-step score separation clears 5% comfortably.
    double v_size_factor = 1.0;
    double y_size_factor = 1.5;
};

// Reversed full (not necessarily complete) tree: every non-root node has one
// outgoing edge toward the root, every internal node gathers up to delta_in
// parents, all leaves sit at the same depth. `next_id` supplies fresh ids for
// leaves and internal nodes; the given root is reused, not allocated.
struct ReversedTree {
    std::vector<Edge> edges;
    std::vector<NodeId> leaves;
    std::vector<NodeId> internals;  // excluding the root
    int depth = 0;                  // edge-path length from any leaf to the root
};

ReversedTree reversed_tree(NodeId leaf_count, NodeId delta_in, NodeId root, NodeId& next_id);

// Family of near-indistinguishable graphs sharing every edge except the
// out-edges of the set Y: in graph i, the first floor(i*|Y|/p) nodes of a
// seeded ordering of Y feed a reversed tree into u_star and the rest only
// self-loop. All graphs share one seeded node-id permutation, exact node and
// edge counts, and the degree caps.
struct HardFamily {
    std::vector<DirectedGraph> graphs;            // H_0 .. H_p
    std::vector<std::vector<Edge>> edge_lists;    // emission order per graph
    NodeId t = 0, v_star = 0, u_star = 0;
    std::uint64_t size_u = 0, size_v = 0, size_w = 0, size_y = 0;
    NodeId d = 0;
    double gamma = 0.0;
    double alpha = 0.0;
    NodeId delta_in = 0, delta_out = 0;
    int p = 0;
    std::uint64_t seed = 0;
    HardFamilyOptions options;
};

HardFamily build_hard_family(std::uint64_t n, std::uint64_t m, NodeId delta_in, NodeId delta_out,
                             double alpha, int p, std::uint64_t seed,
                             const HardFamilyOptions& options = {});

struct SeparationReport {
    std::vector<double> target_scores;  // exact pi(t) per graph
    std::vector<double> ratios;         // consecutive score ratios
    double min_ratio = 0.0;
    double balance = 0.0;  // (1-alpha)^{log_d |Y|} * |Y| / |V|
    bool pass = false;
};

// Exact verification of the multiplicative separation between consecutive
// graphs; passes when every ratio is at least 1 + min_separation.
SeparationReport verify_family(const HardFamily& family, double tol = 1e-12,
                               double min_separation = 0.05);

// Writes H_0.edges .. H_p.edges plus manifest.json. Deterministic bytes for a
// fixed seed.
void export_family(const HardFamily& family, const std::filesystem::path& outdir);

}  // namespace prlocal

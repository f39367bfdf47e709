#include "prlocal/hard_instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "prlocal/exact.hpp"
#include "prlocal/rng.hpp"
#include "prlocal/rounding_push.hpp"

namespace prlocal {

namespace {

std::vector<NodeId> seeded_permutation(NodeId n, Rng& rng) {
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    for (NodeId i = n; i > 1; --i) {
        const auto j = static_cast<NodeId>(rng.below(i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

[[noreturn]] void infeasible(const std::string& what) { throw InfeasibleInstance(what); }

}  // namespace

ReversedTree reversed_tree(NodeId leaf_count, NodeId delta_in, NodeId root, NodeId& next_id) {
    if (leaf_count < 1) throw std::invalid_argument("leaf_count must be >= 1");
    if (delta_in < 2) throw std::invalid_argument("delta_in must be >= 2");
    ReversedTree tree;
    tree.leaves.resize(leaf_count);
    for (NodeId& v : tree.leaves) v = next_id++;
    // Level by level toward the root; the first leaf_count edges are the leaf
    // out-edges, in leaf order.
    std::vector<NodeId> current = tree.leaves;
    while (current.size() > delta_in) {
        const auto groups =
            static_cast<NodeId>((current.size() + delta_in - 1) / delta_in);
        std::vector<NodeId> next_level(groups);
        for (NodeId& v : next_level) v = next_id++;
        for (std::size_t k = 0; k < current.size(); ++k)
            tree.edges.push_back({current[k], next_level[k / delta_in]});
        tree.internals.insert(tree.internals.end(), next_level.begin(), next_level.end());
        current = std::move(next_level);
        ++tree.depth;
    }
    for (NodeId v : current) tree.edges.push_back({v, root});
    ++tree.depth;
    return tree;
}

HardFamily build_hard_family(std::uint64_t n, std::uint64_t m, NodeId delta_in, NodeId delta_out,
                             double alpha, int p, std::uint64_t seed,
                             const HardFamilyOptions& options) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    if (n < 8) infeasible("n too small to host the construction");
    if ((1.0 - alpha) * delta_in <= 1.0)
        infeasible("delta_in <= 1/(1-alpha): the query lower bound is trivial in this regime, "
                   "no hard family exists");
    const NodeId d = std::min(delta_in, delta_out);
    if (d < 2) infeasible("min(delta_in, delta_out) must be >= 2");
    if (static_cast<double>(d) > std::cbrt(static_cast<double>(n)) + 1e-9)
        infeasible("construction requires min(delta_in, delta_out) <= n^(1/3)");

    HardFamily family;
    family.d = d;
    family.gamma = gamma_exponent(alpha, delta_in);
    family.alpha = alpha;
    family.delta_in = delta_in;
    family.delta_out = delta_out;
    family.p = p;
    family.seed = seed;
    family.options = options;

    const double nd = static_cast<double>(n);
    const double dd = static_cast<double>(d);
    const auto size_v = static_cast<NodeId>(std::max(
        1.0, std::ceil(options.v_size_factor * std::pow(nd, 0.5 - family.gamma) *
                       std::pow(dd, -0.5 + family.gamma))));
    const auto size_y = static_cast<NodeId>(std::max(
        1.0, std::ceil(options.y_size_factor * std::pow(nd, 0.5 + family.gamma) *
                       std::pow(dd, -0.5 - family.gamma))));
    family.size_u = family.size_v = family.size_w = size_v;
    family.size_y = size_y;

    Rng rng(mix_seed(seed, 0x68617264ULL));

    NodeId next_id = 0;
    const NodeId t = next_id++;
    const ReversedTree tree_v = reversed_tree(size_v, delta_in, t, next_id);
    std::vector<NodeId> set_u(size_v), set_w(size_v);
    for (NodeId& v : set_u) v = next_id++;
    for (NodeId& v : set_w) v = next_id++;

    const auto v_star_idx = static_cast<NodeId>(rng.below(size_v));
    const NodeId v_star = tree_v.leaves[v_star_idx];
    const NodeId u_star = set_u[v_star_idx];

    const ReversedTree tree_y = reversed_tree(size_y, delta_in, u_star, next_id);
    const NodeId sink_a = next_id++;
    const NodeId sink_b = next_id++;
    if (next_id > n)
        infeasible("n too small: components need " + std::to_string(next_id) + " nodes, have " +
                   std::to_string(n));
    const auto pad_count = static_cast<NodeId>(n - next_id);
    const NodeId pad_first = next_id;

    // Shared edges, emitted in a fixed order. Slot k of the variable block
    // holds the out-edge of the k-th Y leaf in every graph.
    std::vector<Edge> shared_before;  // everything up to the variable block
    shared_before.insert(shared_before.end(), tree_v.edges.begin(), tree_v.edges.end());
    for (NodeId j = 0; j < size_v; ++j) shared_before.push_back({set_u[j], tree_v.leaves[j]});
    for (NodeId j = 0; j < size_v; ++j)
        for (NodeId k = 1; k < d; ++k)
            shared_before.push_back({set_w[(j + k) % size_v], tree_v.leaves[j]});
    shared_before.insert(shared_before.end(), tree_y.edges.begin() + size_y, tree_y.edges.end());

    std::vector<Edge> shared_after;
    shared_after.push_back({t, sink_a});
    shared_after.push_back({sink_a, sink_b});
    shared_after.push_back({sink_b, sink_a});
    for (NodeId k = 0; k < pad_count; ++k)
        shared_after.push_back({static_cast<NodeId>(pad_first + k),
                                static_cast<NodeId>(pad_first + (k + 1) % pad_count)});

    const std::uint64_t fixed_edges = shared_before.size() + size_y + shared_after.size();
    if (m < fixed_edges)
        infeasible("m too small: the structure alone has " + std::to_string(fixed_edges) +
                   " edges");
    std::uint64_t chords = m - fixed_edges;
    const std::uint64_t max_rounds = static_cast<std::uint64_t>(d) - 1;
    if (chords > 0 && pad_count == 0)
        infeasible("m too large: no padding nodes left to absorb extra edges");
    if (pad_count > 0 && chords > max_rounds * pad_count)
        infeasible("m too large: padding can absorb at most " +
                   std::to_string(max_rounds * pad_count) + " chord edges under the degree caps");
    // Chords round-robin over the padding cycle with growing stride.
    for (std::uint64_t round = 0; chords > 0; ++round) {
        const auto offset = static_cast<NodeId>((round + 2) % std::max<NodeId>(pad_count, 1));
        for (NodeId k = 0; k < pad_count && chords > 0; ++k, --chords)
            shared_after.push_back({static_cast<NodeId>(pad_first + k),
                                    static_cast<NodeId>(pad_first + (k + offset) % pad_count)});
    }

    // Seeded activation order over Y; graph i wires the first i*|Y|/p leaves
    // like the top instance and self-loops the rest.
    std::vector<NodeId> activation(size_y);
    std::iota(activation.begin(), activation.end(), NodeId{0});
    for (NodeId i = size_y; i > 1; --i) {
        const auto j = static_cast<NodeId>(rng.below(i));
        std::swap(activation[i - 1], activation[j]);
    }
    std::vector<NodeId> activation_rank(size_y);
    for (NodeId r = 0; r < size_y; ++r) activation_rank[activation[r]] = r;

    const std::vector<NodeId> ids = seeded_permutation(static_cast<NodeId>(n), rng);
    family.t = ids[t];
    family.v_star = ids[v_star];
    family.u_star = ids[u_star];

    for (int i = 0; i <= p; ++i) {
        const std::uint64_t active =
            static_cast<std::uint64_t>(i) * size_y / static_cast<std::uint64_t>(p);
        std::vector<Edge> edges;
        edges.reserve(m);
        for (const Edge& e : shared_before) edges.push_back({ids[e.from], ids[e.to]});
        for (NodeId k = 0; k < size_y; ++k) {
            const NodeId leaf = tree_y.leaves[k];
            const NodeId to = activation_rank[k] < active ? tree_y.edges[k].to : leaf;
            edges.push_back({ids[leaf], ids[to]});
        }
        for (const Edge& e : shared_after) edges.push_back({ids[e.from], ids[e.to]});
        std::stable_sort(edges.begin(), edges.end(),
                         [](const Edge& a, const Edge& b) { return a.from < b.from; });

        DirectedGraph g = DirectedGraph::from_edges(static_cast<NodeId>(n), edges);
        if (g.num_edges() != m) infeasible("internal error: edge count mismatch");
        if (g.max_in_degree() > delta_in || g.max_out_degree() > delta_out)
            infeasible("internal error: construction exceeded a degree cap");
        family.edge_lists.push_back(std::move(edges));
        family.graphs.push_back(std::move(g));
    }
    return family;
}

SeparationReport verify_family(const HardFamily& family, double tol, double min_separation) {
    SeparationReport report;
    report.target_scores.reserve(family.graphs.size());
    for (const DirectedGraph& g : family.graphs)
        report.target_scores.push_back(exact_pagerank(g, family.alpha, tol)[family.t]);
    report.min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < report.target_scores.size(); ++i) {
        const double ratio = report.target_scores[i] / report.target_scores[i - 1];
        report.ratios.push_back(ratio);
        report.min_ratio = std::min(report.min_ratio, ratio);
    }
    report.balance = std::pow(1.0 - family.alpha,
                              std::log(static_cast<double>(family.size_y)) /
                                  std::log(static_cast<double>(family.delta_in))) *
                     static_cast<double>(family.size_y) / static_cast<double>(family.size_v);
    report.pass = report.min_ratio >= 1.0 + min_separation;
    return report;
}

void export_family(const HardFamily& family, const std::filesystem::path& outdir) {
    std::filesystem::create_directories(outdir);
    std::vector<std::string> files;
    for (std::size_t i = 0; i < family.graphs.size(); ++i) {
        std::string name = "H_" + std::to_string(i) + ".edges";
        save_edge_list(family.graphs[i], outdir / name);
        files.push_back(std::move(name));
    }
    nlohmann::json manifest{
        {"n", family.graphs.front().num_nodes()},
        {"m", family.graphs.front().num_edges()},
        {"delta_in", family.delta_in},
        {"delta_out", family.delta_out},
        {"alpha", family.alpha},
        {"p", family.p},
        {"seed", family.seed},
        {"d", family.d},
        {"gamma", family.gamma},
        {"t", family.t},
        {"v_star", family.v_star},
        {"u_star", family.u_star},
        {"set_sizes",
         {{"U", family.size_u}, {"V", family.size_v}, {"W", family.size_w}, {"Y", family.size_y}}},
        {"v_size_factor", family.options.v_size_factor},
        {"y_size_factor", family.options.y_size_factor},
        {"files", files},
    };
    std::ofstream out(outdir / "manifest.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest.json");
    out << manifest.dump(2) << '\n';
}

}  // namespace prlocal

#include "prlocal/push.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace prlocal {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
}

}  // namespace

FlatPushState::FlatPushState(NodeId t, double a) : target(t), alpha(a) {
    check_alpha(a);
    residue.set(t, 1.0);
}

void pushback_flat(FlatPushState& state, NodeId v, OracleSession& session,
                   std::vector<NodeId>* touched) {
    const double r_old = state.residue.value(v);
    if (!(r_old > 0.0)) throw std::logic_error("pushback on zero-residue node");
    OracleScope scope;
    state.residue.set(v, 0.0);
    state.reserve.add(v, state.alpha * r_old);
    const NodeId din = session.indeg(v);
    for (NodeId i = 1; i <= din; ++i) {
        const NodeId u = session.parent(v, i);
        const NodeId du = session.outdeg(u);
        state.residue.add(u, (1.0 - state.alpha) * r_old / du);
        if (touched) touched->push_back(u);
    }
}

FlatPushState approx_contributions(OracleSession& session, NodeId t, double alpha, double r_max,
                                   const FlatPushObserver& observer) {
    if (!(r_max > 0.0)) throw std::invalid_argument("r_max must be positive");
    session.graph().check_node(t);
    FlatPushState state(t, alpha);
    std::deque<NodeId> queue;
    std::unordered_set<NodeId> queued;
    if (state.residue.value(t) >= r_max) {
        queue.push_back(t);
        queued.insert(t);
    }
    std::vector<NodeId> touched;
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        queued.erase(v);
        if (state.residue.value(v) < r_max) continue;
        touched.clear();
        pushback_flat(state, v, session, &touched);
        if (observer) observer(state, v);
        // Only nodes this push touched can newly reach the threshold.
        for (NodeId u : touched) {
            if (state.residue.value(u) >= r_max && queued.insert(u).second) queue.push_back(u);
        }
    }
    return state;
}

PushState::PushState(int L, NodeId t, double a) : levels(L), target(t), alpha(a) {
    if (L < 1) throw std::invalid_argument("level count must be >= 1");
    check_alpha(a);
    reserves.resize(static_cast<std::size_t>(L) + 1);
    residues.resize(static_cast<std::size_t>(L) + 1);
    residues[0].set(t, 1.0);
}

PushState push_without_threshold(OracleSession& session, NodeId t, int L, double alpha,
                                 const LeveledPushObserver& observer) {
    session.graph().check_node(t);
    PushState state(L, t, alpha);
    OracleScope scope;
    for (int i = 0; i < L; ++i) {
        for (NodeId v : state.residues[i].nonzero_keys_sorted()) {
            const double r = state.residues[i].value(v);
            state.reserves[i].set(v, alpha * r);
            const NodeId din = session.indeg(v);
            for (NodeId k = 1; k <= din; ++k) {
                const NodeId u = session.parent(v, k);
                const NodeId du = session.outdeg(u);
                state.residues[i + 1].add(u, (1.0 - alpha) * r / du);
            }
            state.residues[i].set(v, 0.0);
            if (observer) observer(i, v, state);
        }
    }
    return state;
}

double y_value(const PushState& state, const ScoreVector& exact_pi, NodeId n) {
    if (exact_pi.size() != n) throw std::invalid_argument("score vector does not match graph size");
    double y = 0.0;
    for (int i = 0; i < state.levels; ++i) {
        for (const auto& [v, p] : state.reserves[i].entries()) y += p / n;
        for (const auto& [v, r] : state.residues[i].entries()) y += exact_pi.values[v] * r;
    }
    return y;
}

std::string push_state_to_json(const PushState& state) {
    nlohmann::json j = nlohmann::json::object();
    for (int i = 0; i <= state.levels; ++i) {
        nlohmann::json level = nlohmann::json::object();
        auto emit = [&](const SparseVec& vec, const char* key) {
            for (const auto& [v, x] : vec.entries()) {
                if (x == 0.0) continue;
                auto& node = level[std::to_string(v)];
                if (node.is_null()) node = {{"p", 0.0}, {"r", 0.0}};
                node[key] = x;
            }
        };
        emit(state.reserves[i], "p");
        emit(state.residues[i], "r");
        if (!level.empty()) j[std::to_string(i)] = std::move(level);
    }
    return j.dump();
}

}  // namespace prlocal

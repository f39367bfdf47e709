#pragma once

#include <functional>
#include <string>

#include "prlocal/exact.hpp"
#include "prlocal/oracle.hpp"
#include "prlocal/sparse_vec.hpp"

namespace prlocal {

// Backward-push state without levels: one residue and one reserve map,
// initialized with all mass as residue on the target.
struct FlatPushState {
    SparseVec reserve;
    SparseVec residue;
    NodeId target;
    double alpha;

    FlatPushState(NodeId t, double alpha);
};

// Simulates one walk step in reverse on node v: moves an alpha fraction of
// v's residue to its reserve and spreads the rest onto the residues of v's
// in-neighbors, scaled by their out-degrees. Graph access goes through the
// session (INDEG, PARENT, OUTDEG). Requires residue(v) > 0.
//
// The old residue is consumed first, so a self-loop leaves v with exactly
// its propagated share rather than zero.
//
// If `touched` is given it receives the in-neighbors whose residues grew,
// once per incoming edge.
void pushback_flat(FlatPushState& state, NodeId v, OracleSession& session,
                   std::vector<NodeId>* touched = nullptr);

using FlatPushObserver = std::function<void(const FlatPushState&, NodeId pushed)>;

// Pushes nodes FIFO until every residue is below r_max (the push condition is
// residue >= r_max). Terminates because each push retires at least
// alpha * r_max of residue mass.
FlatPushState approx_contributions(OracleSession& session, NodeId t, double alpha, double r_max,
                                   const FlatPushObserver& observer = {});

// Leveled residue/reserve state: maps r_i and p_i for i in [0, L], with all
// mass initially at r_0(target).
struct PushState {
    int levels;  // L: levels 0..L-1 are processed, level L only receives
    NodeId target;
    double alpha;
    std::vector<SparseVec> reserves;  // size L+1
    std::vector<SparseVec> residues;  // size L+1

    PushState(int L, NodeId t, double alpha);
};

using LeveledPushObserver = std::function<void(int level, NodeId v, const PushState&)>;

// Deterministic leveled push: L rounds, each pushing every node with nonzero
// residue at that level (ascending node id), propagating to the next level.
// At every level i the pre-push residues satisfy r_i(v) <= (1-alpha)^i, and
// the final reserves record them as p_i(v) = alpha * r_i(v).
PushState push_without_threshold(OracleSession& session, NodeId t, int L, double alpha,
                                 const LeveledPushObserver& observer = {});

// Test-support functional over a leveled state: sum over levels 0..L-1 of
// p_i(v)/n + pi(v) * r_i(v), with exact PageRank values pi. Level L is
// excluded. Invariant under pushbacks at levels 0..L-2.
double y_value(const PushState& state, const ScoreVector& exact_pi, NodeId n);

// Debug dump as JSON {level: {node: {"p": .., "r": ..}}}, nonzero entries only.
std::string push_state_to_json(const PushState& state);

}  // namespace prlocal

#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "prlocal/exact.hpp"
#include "prlocal/monte_carlo.hpp"
#include "prlocal/oracle.hpp"
#include "prlocal/push.hpp"

namespace prlocal {

// Improvement exponent as a function of alpha and the in-degree cap: 1/2 when
// delta_in <= 1/(1-alpha), shrinking toward 0 as delta_in grows.
double gamma_exponent(double alpha, NodeId delta_in);

// Derived algorithm parameters. r_max stays unset until either a caller picks
// it explicitly or the adaptive driver fixes it.
struct AlgoParams {
    double alpha = 0.0;
    double gamma = 0.0;
    double i_star = 0.0;
    int i_prime = 0;
    double epsilon = 0.0;
    std::uint64_t n_r = 0;
    int levels = 0;  // L
    std::optional<double> r_max;
};

// Evaluates the parameter block from the graph's size and degree caps.
// When min(delta_in, delta_out) <= sqrt(n), m drops out of the exponent base
// (m >= n forces the min through the degree caps), so m is never consulted.
AlgoParams compute_params(std::uint64_t n, std::uint64_t m, NodeId delta_in, NodeId delta_out,
                          double alpha);

// Threshold split of the Monte Carlo estimates: nodes with estimate >= epsilon
// (ties included) versus the rest.
struct Partition {
    std::vector<NodeId> large;  // ascending
    bool is_large(NodeId v) const { return large_set_.contains(v); }

    static Partition from_nodes(std::vector<NodeId> nodes);

  private:
    std::unordered_set<NodeId> large_set_;
};

Partition partition_by_threshold(const McEstimates& estimates, double epsilon);

// Randomized rounding of a sub-threshold residue: r_max with probability
// r_hat / r_max, else 0, so the conditional expectation is exactly r_hat.
// Callers must not round values at or above r_max.
double rounding_op(double r_hat, double r_max, Rng& rng);

struct EstimateReport {
    double estimate = 0.0;
    QueryCounts queries;
    AlgoParams params;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
    std::vector<double> r_max_schedule;
    bool budget_truncated = false;
};

// Test-support hooks into a single run; every callback fires while the run is
// in progress. `on_node` precedes the rounding/pushback decisions for that
// node, `on_rounding`/`on_pushback` fire after the respective operation.
class RunObserver {
  public:
    virtual ~RunObserver() = default;
    virtual void on_estimates(const McEstimates&) {}
    virtual void on_partition(const Partition&) {}
    virtual void on_node(int /*level*/, NodeId, const PushState&) {}
    virtual void on_rounding(int /*level*/, NodeId, double /*before*/, double /*after*/,
                             const PushState&) {}
    virtual void on_pushback(int /*level*/, NodeId, const PushState&) {}
    virtual void on_finish(const PushState&, const McEstimates&, double /*estimate*/) {}
};

// One full estimation run with a fixed r_max: Monte Carlo phase, threshold
// partition, then L levels of rounding plus pushback restricted to the
// small-estimate side. The returned estimate sums reserves/n and
// estimate-weighted residues over levels 0..L-1; level-L residues are
// discarded. Queries count this run only.
EstimateReport rounding_push_run(OracleSession& session, NodeId t, const AlgoParams& params,
                                 RunObserver* observer = nullptr);

inline constexpr double kDefaultBudgetConst = 5000.0;

// Query budget for the adaptive driver:
//   budget_const * n^{1/2} * min(din^{1/2}/n^gamma, dout^{1/2}/n^gamma, m^{1/4}) * log2(n).
double query_budget(std::uint64_t n, std::uint64_t m, NodeId delta_in, NodeId delta_out,
                    double alpha, double budget_const);

// Production entry point: r_max depends on the unknown score being estimated,
// so this reruns the push process with r_max = 1/2, 1/4, 1/8, ... until the
// cumulative query cost exceeds the budget, returning the last completed
// run's report. Queries accumulate across the whole schedule, and the report
// carries every attempted r_max. If the first run alone exceeds the budget
// its report comes back flagged budget_truncated.
EstimateReport adaptive_estimate(OracleSession& session, NodeId t, std::uint64_t n,
                                 std::uint64_t m, NodeId delta_in, NodeId delta_out, double alpha,
                                 double budget_const = kDefaultBudgetConst,
                                 RunObserver* observer = nullptr);

// Test-support check of the three Monte Carlo accuracy conditions: relative
// 1/20 error on the large side, tails >= 2/3 epsilon on the large side,
// tails <= 2 epsilon on the small side.
struct EventEViolation {
    NodeId node;
    int condition;  // 1: relative error, 2: large-side floor, 3: small-side cap
};

struct EventEResult {
    bool holds = false;
    std::vector<EventEViolation> violations;
};

EventEResult event_E_check(const McEstimates& estimates, const ScoreVector& tails, double epsilon);

}  // namespace prlocal

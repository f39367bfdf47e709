#include "prlocal/rounding_push.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace prlocal {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
}

// log() of an exactly-integral power can land a hair on the wrong side of the
// integer; floor/ceil on the parameter block must not flip on that.
double snap_to_integer(double x) {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) < 1e-9 * std::max(1.0, std::abs(x))) return nearest;
    return x;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

double gamma_exponent(double alpha, NodeId delta_in) {
    check_alpha(alpha);
    if (delta_in < 1) throw std::invalid_argument("delta_in must be >= 1");
    const double decay = std::log(1.0 / (1.0 - alpha));
    if (static_cast<double>(delta_in) * (1.0 - alpha) <= 1.0) return 0.5;
    return decay / (4.0 * std::log(static_cast<double>(delta_in)) - 2.0 * decay);
}

AlgoParams compute_params(std::uint64_t n, std::uint64_t m, NodeId delta_in, NodeId delta_out,
                          double alpha) {
    check_alpha(alpha);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (m < n) throw std::invalid_argument("m must be >= n (every node has an out-edge)");
    if (delta_in < 1 || delta_out < 1) throw std::invalid_argument("degree caps must be >= 1");
    if (delta_in > n || delta_out > n) throw std::invalid_argument("degree caps cannot exceed n");

    AlgoParams p;
    p.alpha = alpha;
    p.gamma = gamma_exponent(alpha, delta_in);

    const double nd = static_cast<double>(n);
    const double decayed_din = (1.0 - alpha) * static_cast<double>(delta_in);
    if (decayed_din > 1.0) {
        const double dmin = static_cast<double>(std::min(delta_in, delta_out));
        const double min_term =
            dmin <= std::sqrt(nd) ? dmin : std::min(dmin, std::sqrt(static_cast<double>(m)));
        p.i_star = snap_to_integer(std::log(nd / min_term) /
                                   std::log(decayed_din * static_cast<double>(delta_in)));
    } else {
        p.i_star = snap_to_integer(std::log(nd) / std::log(1.0 / (1.0 - alpha)));
    }
    p.i_prime = static_cast<int>(std::floor(p.i_star));

    p.epsilon = (30.0 * alpha / nd) * (p.i_prime + 1) *
                std::max(std::pow(decayed_din, p.i_star), 1.0);
    p.n_r = static_cast<std::uint64_t>(std::ceil(
        3200.0 * std::pow(1.0 - alpha, p.i_prime) * std::log(40.0 * nd) / p.epsilon));
    p.levels = static_cast<int>(std::ceil(snap_to_integer(
                   std::log(alpha / (400.0 * nd)) / std::log(1.0 - alpha)))) +
               1;
    return p;
}

Partition Partition::from_nodes(std::vector<NodeId> nodes) {
    Partition part;
    std::sort(nodes.begin(), nodes.end());
    part.large_set_.insert(nodes.begin(), nodes.end());
    part.large = std::move(nodes);
    return part;
}

Partition partition_by_threshold(const McEstimates& estimates, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    std::vector<NodeId> large;
    const double inc = estimates.increment();
    for (const auto& [v, c] : estimates.counts) {
        if (static_cast<double>(c) * inc >= epsilon) large.push_back(v);
    }
    return Partition::from_nodes(std::move(large));
}

double rounding_op(double r_hat, double r_max, Rng& rng) {
    if (!(r_max > 0.0)) throw std::invalid_argument("r_max must be positive");
    if (!(r_hat > 0.0) || r_hat >= r_max)
        throw std::logic_error("rounding_op requires 0 < r_hat < r_max");
    return rng.bernoulli(r_hat / r_max) ? r_max : 0.0;
}

EstimateReport rounding_push_run(OracleSession& session, NodeId t, const AlgoParams& params,
                                 RunObserver* observer) {
    if (!params.r_max.has_value() || !(*params.r_max > 0.0))
        throw std::invalid_argument("rounding_push_run needs a positive r_max");
    if (params.levels < 1) throw std::invalid_argument("params.levels must be >= 1");
    session.graph().check_node(t);

    const auto start = Clock::now();
    const QueryCounts before = session.counts();
    const double r_max = *params.r_max;
    const double alpha = params.alpha;
    const NodeId n = session.graph().num_nodes();

    McEstimates estimates = monte_carlo(session, alpha, params.n_r, params.i_prime);
    if (observer) observer->on_estimates(estimates);
    Partition part = partition_by_threshold(estimates, params.epsilon);
    if (observer) observer->on_partition(part);

    PushState state(params.levels, t, alpha);
    {
        OracleScope scope;
        Rng& rng = session.algo_rng();
        for (int i = 0; i < params.levels; ++i) {
            for (NodeId v : state.residues[i].nonzero_keys_sorted()) {
                if (part.is_large(v)) continue;
                double r = state.residues[i].value(v);
                if (r <= 0.0) continue;
                if (observer) observer->on_node(i, v, state);
                if (r < r_max) {
                    const double rounded = rounding_op(r, r_max, rng);
                    state.residues[i].set(v, rounded);
                    if (observer) observer->on_rounding(i, v, r, rounded, state);
                    r = rounded;
                }
                if (r > 0.0) {
                    state.reserves[i].set(v, alpha * r);
                    const NodeId din = session.indeg(v);
                    for (NodeId k = 1; k <= din; ++k) {
                        const NodeId u = session.parent(v, k);
                        const NodeId du = session.outdeg(u);
                        state.residues[i + 1].add(u, (1.0 - alpha) * r / du);
                    }
                    state.residues[i].set(v, 0.0);
                    if (observer) observer->on_pushback(i, v, state);
                }
            }
        }
    }

    double estimate = 0.0;
    for (int i = 0; i < params.levels; ++i) {
        for (const auto& [v, p] : state.reserves[i].entries()) estimate += p / n;
        for (const auto& [v, r] : state.residues[i].entries())
            if (r > 0.0) estimate += estimates.value(v) * r;
    }
    if (observer) observer->on_finish(state, estimates, estimate);

    EstimateReport report;
    report.estimate = estimate;
    report.queries = session.counts() - before;
    report.params = params;
    report.seed = session.seed();
    report.elapsed_ms = ms_since(start);
    report.r_max_schedule = {r_max};
    return report;
}

double query_budget(std::uint64_t n, std::uint64_t m, NodeId delta_in, NodeId delta_out,
                    double alpha, double budget_const) {
    if (!(budget_const > 0.0)) throw std::invalid_argument("budget_const must be positive");
    const double nd = static_cast<double>(n);
    const double gamma = gamma_exponent(alpha, delta_in);
    const double ngamma = std::pow(nd, gamma);
    const double min_term =
        std::min({std::sqrt(static_cast<double>(delta_in)) / ngamma,
                  std::sqrt(static_cast<double>(delta_out)) / ngamma,
                  std::pow(static_cast<double>(m), 0.25)});
    const double polylog = std::max(1.0, std::log2(nd));
    return budget_const * std::sqrt(nd) * min_term * polylog;
}

EstimateReport adaptive_estimate(OracleSession& session, NodeId t, std::uint64_t n,
                                 std::uint64_t m, NodeId delta_in, NodeId delta_out, double alpha,
                                 double budget_const, RunObserver* observer) {
    const auto start = Clock::now();
    const QueryCounts before = session.counts();
    AlgoParams params = compute_params(n, m, delta_in, delta_out, alpha);
    const double budget = query_budget(n, m, delta_in, delta_out, alpha, budget_const);

    std::vector<double> schedule;
    EstimateReport last;
    for (double r_max = 0.5;; r_max *= 0.5) {
        params.r_max = r_max;
        last = rounding_push_run(session, t, params, observer);
        schedule.push_back(r_max);
        const std::uint64_t used = (session.counts() - before).total();
        if (static_cast<double>(used) > budget) {
            last.budget_truncated = schedule.size() == 1;
            break;
        }
    }
    last.queries = session.counts() - before;
    last.r_max_schedule = std::move(schedule);
    last.elapsed_ms = ms_since(start);
    return last;
}

EventEResult event_E_check(const McEstimates& estimates, const ScoreVector& tails,
                           double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (tails.kind != ScoreKind::Tail || tails.alpha != estimates.alpha ||
        tails.param != estimates.i_prime)
        throw std::invalid_argument("tail vector does not match the estimates' alpha/i_prime");

    EventEResult result;
    const double inc = estimates.increment();
    auto it = estimates.counts.begin();
    for (NodeId v = 0; v < tails.size(); ++v) {
        double est = 0.0;
        if (it != estimates.counts.end() && it->first == v) {
            est = static_cast<double>(it->second) * inc;
            ++it;
        }
        const double tail = tails.values[v];
        if (est >= epsilon) {
            if (std::abs(est - tail) > tail / 20.0) result.violations.push_back({v, 1});
            if (tail < 2.0 * epsilon / 3.0) result.violations.push_back({v, 2});
        } else {
            if (tail > 2.0 * epsilon) result.violations.push_back({v, 3});
        }
    }
    result.holds = result.violations.empty();
    return result;
}

}  // namespace prlocal

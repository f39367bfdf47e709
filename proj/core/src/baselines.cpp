#include "prlocal/baselines.hpp"

#include <chrono>
#include <stdexcept>

#include "prlocal/monte_carlo.hpp"
#include "prlocal/push.hpp"

namespace prlocal {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

BaselineReport plain_mc(OracleSession& session, NodeId t, double alpha, std::uint64_t n_walks) {
    if (n_walks < 1) throw std::invalid_argument("n_walks must be >= 1");
    session.graph().check_node(t);
    const auto start = Clock::now();
    const QueryCounts before = session.counts();
    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < n_walks; ++k)
        if (sample_extended_walk(session, alpha, 0) == t) ++hits;
    BaselineReport report;
    report.estimate = static_cast<double>(hits) / static_cast<double>(n_walks);
    report.queries = session.counts() - before;
    report.method = "plain_mc";
    report.n_walks = n_walks;
    report.seed = session.seed();
    report.elapsed_ms = ms_since(start);
    return report;
}

BaselineReport bippr(OracleSession& session, NodeId t, double alpha, double r_max,
                     std::uint64_t n_walks) {
    if (n_walks < 1) throw std::invalid_argument("n_walks must be >= 1");
    session.graph().check_node(t);
    const auto start = Clock::now();
    const QueryCounts before = session.counts();

    const FlatPushState state = approx_contributions(session, t, alpha, r_max);
    double reserve_sum = 0.0;
    for (const auto& [v, p] : state.reserve.entries()) reserve_sum += p;
    const double base = reserve_sum / session.graph().num_nodes();

    double residue_acc = 0.0;
    for (std::uint64_t k = 0; k < n_walks; ++k)
        residue_acc += state.residue.value(sample_extended_walk(session, alpha, 0));

    BaselineReport report;
    report.estimate = base + residue_acc / static_cast<double>(n_walks);
    report.queries = session.counts() - before;
    report.method = "bippr";
    report.n_walks = n_walks;
    report.r_max = r_max;
    report.seed = session.seed();
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace prlocal

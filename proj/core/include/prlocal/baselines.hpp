#pragma once

#include <cstdint>
#include <string>

#include "prlocal/oracle.hpp"

namespace prlocal {

struct BaselineReport {
    double estimate = 0.0;
    QueryCounts queries;
    std::string method;
    std::uint64_t n_walks = 0;
    double r_max = 0.0;  // 0 when not applicable
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
};

// Plain Monte Carlo: fraction of termination-sampled walks ending at t.
BaselineReport plain_mc(OracleSession& session, NodeId t, double alpha, std::uint64_t n_walks);

// Bidirectional estimator: a backward push to threshold r_max from t, then
// walk endpoints weighted by their leftover residue. Unbiased because the
// push process maintains pi(t) = sum_v p(v)/n + sum_v pi(v) r(v).
BaselineReport bippr(OracleSession& session, NodeId t, double alpha, double r_max,
                     std::uint64_t n_walks);

}  // namespace prlocal

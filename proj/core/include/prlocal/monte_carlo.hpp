#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prlocal/oracle.hpp"

namespace prlocal {

// Sparse estimates produced by the extended-walk Monte Carlo phase. Endpoint
// hits are kept as integer counts; the estimate for node v is
// count(v) * (1-alpha)^{i_prime} / n_r, so the total estimated mass is
// (1-alpha)^{i_prime} by construction.
struct McEstimates {
    double alpha = 0.0;
    int i_prime = 0;
    std::uint64_t n_r = 0;
    std::vector<std::pair<NodeId, std::uint64_t>> counts;  // ascending node id

    double increment() const;  // (1-alpha)^{i_prime} / n_r
    double value(NodeId v) const;
    double total_mass() const;

    // Combine estimates from independent sessions over the same graph.
    // Requires matching alpha and i_prime.
    void merge(const McEstimates& other);
};

// Endpoint of one walk: a termination-sampled walk from a random start,
// extended by exactly i_prime further uniform steps.
NodeId sample_extended_walk(OracleSession& session, double alpha, int i_prime);

// n_r independent extended walks, aggregated. For every node the estimate is
// unbiased for its tail PageRank starting at hop i_prime.
McEstimates monte_carlo(OracleSession& session, double alpha, std::uint64_t n_r, int i_prime);

std::string estimates_csv_string(const McEstimates& estimates);

}  // namespace prlocal

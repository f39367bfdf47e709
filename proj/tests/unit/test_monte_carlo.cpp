#include <cmath>

#include "doctest.h"
#include "prlocal/exact.hpp"
#include "prlocal/monte_carlo.hpp"
#include "prlocal/synth.hpp"
#include "test_support.hpp"

using namespace prlocal;

TEST_CASE("extended walk on a single self-loop always ends there") {
    DirectedGraph g = testing::self_loop();
    OracleSession s(g, 42);
    for (int i = 0; i < 50; ++i) CHECK(sample_extended_walk(s, 0.3, 5) == 0);
}

TEST_CASE("plain walk endpoints follow the termination distribution") {
    DirectedGraph g = testing::two_cycle();
    OracleSession s(g, 404);
    const int walks = 100000;
    int hits = 0;
    for (int i = 0; i < walks; ++i) hits += sample_extended_walk(s, 0.5, 0) == 0;
    const double sigma = std::sqrt(walks * 0.25);
    CHECK(std::abs(hits - walks * 0.5) <= 3 * sigma);
}

TEST_CASE("extended endpoints on the two-cycle stay uniform") {
    DirectedGraph g = testing::two_cycle();
    OracleSession s(g, 77);
    const int walks = 100000;
    int hits = 0;
    for (int i = 0; i < walks; ++i) hits += sample_extended_walk(s, 0.5, 1) == 0;
    const double sigma = std::sqrt(walks * 0.25);
    CHECK(std::abs(hits - walks * 0.5) <= 3 * sigma);
}

TEST_CASE("estimate mass is exactly the extension discount") {
    DirectedGraph g = random_mixed(30, 3, 5);
    for (int i_prime : {0, 1, 3}) {
        OracleSession s(g, 9);
        McEstimates est = monte_carlo(s, 0.4, 500, i_prime);
        std::uint64_t total = 0;
        for (const auto& [v, c] : est.counts) total += c;
        CHECK(total == 500);
        CHECK(est.total_mass() ==
              doctest::Approx(std::pow(0.6, i_prime)).epsilon(1e-12));
        // every value is an integer multiple of the fixed increment
        for (const auto& [v, c] : est.counts)
            CHECK(est.value(v) == doctest::Approx(c * est.increment()).epsilon(1e-15));
    }
}

TEST_CASE("estimates are unbiased for tail pagerank") {
    DirectedGraph g = random_mixed(20, 3, 33);
    const double alpha = 0.5;
    for (int i_prime : {0, 2}) {
        ScoreVector tail = tail_pagerank(g, alpha, i_prime, 1e-12);
        const double scale = std::pow(1.0 - alpha, i_prime);
        OracleSession s(g, 1000 + i_prime);
        const std::uint64_t walks = 200000;
        McEstimates est = monte_carlo(s, alpha, walks, i_prime);
        // endpoint counts are binomial with success probability tail(v)/scale
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            const double q = tail[v] / scale;
            const double sigma = std::sqrt(q * (1 - q) / walks);
            CHECK(std::abs(est.value(v) / scale - q) <= 4 * sigma + 1e-12);
        }
    }
}

TEST_CASE("fixed seeds reproduce estimates bit for bit") {
    DirectedGraph g = random_mixed(25, 4, 2);
    OracleSession a(g, 31), b(g, 31);
    McEstimates ea = monte_carlo(a, 0.3, 2000, 2);
    McEstimates eb = monte_carlo(b, 0.3, 2000, 2);
    CHECK(ea.counts == eb.counts);
    CHECK(a.counts() == b.counts());
}

TEST_CASE("sharded estimates merge into the sequential total") {
    DirectedGraph g = random_mixed(25, 4, 2);
    OracleSession a(g, 11), b(g, 12);
    McEstimates ea = monte_carlo(a, 0.3, 700, 1);
    McEstimates eb = monte_carlo(b, 0.3, 300, 1);
    ea.merge(eb);
    CHECK(ea.n_r == 1000);
    std::uint64_t total = 0;
    for (const auto& [v, c] : ea.counts) total += c;
    CHECK(total == 1000);
    CHECK(ea.total_mass() == doctest::Approx(0.7).epsilon(1e-12));
    McEstimates mismatched = monte_carlo(b, 0.3, 10, 2);
    CHECK_THROWS_AS(ea.merge(mismatched), std::invalid_argument);
}

TEST_CASE("estimates CSV lists sparse nonzero values") {
    DirectedGraph g = testing::self_loop();
    OracleSession s(g, 3);
    McEstimates est = monte_carlo(s, 0.5, 4, 1);
    CHECK(estimates_csv_string(est) == "node,value\n0,0.5\n");
}

TEST_CASE("walk cost scales with the extension length") {
    DirectedGraph g = random_regular(100, 2, 7);
    OracleSession s(g, 5);
    const int walks = 2000;
    monte_carlo(s, 0.5, walks, 0);
    const auto base = static_cast<double>(s.counts().total());
    OracleSession s2(g, 5);
    monte_carlo(s2, 0.5, walks, 10);
    // ten extra steps cost two queries each; the termination phases are
    // independent samples, so allow a few sigmas of geometric noise
    const double extra = static_cast<double>(s2.counts().total()) - base;
    CHECK(std::abs(extra - 2.0 * 10 * walks) < 1500.0);
}

#include <cmath>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "prlocal/exact.hpp"
#include "prlocal/synth.hpp"
#include "test_support.hpp"

using namespace prlocal;

TEST_CASE("pagerank on degenerate graphs") {
    CHECK(exact_pagerank(testing::self_loop(), 0.3)[0] == doctest::Approx(1.0).epsilon(1e-10));
    ScoreVector pi = exact_pagerank(testing::two_cycle(), 0.5);
    CHECK(pi[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(pi[1] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("pagerank on the three-node chain matches the hand solution") {
    ScoreVector pi = exact_pagerank(testing::three_chain(), 0.5);
    CHECK(pi[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-11));
    CHECK(pi[1] == doctest::Approx(1.0 / 4.0).epsilon(1e-11));
    CHECK(pi[2] == doctest::Approx(7.0 / 12.0).epsilon(1e-11));
}

TEST_CASE("pagerank agrees with the dense linear-system route") {
    for (std::uint64_t seed : {2u, 9u, 31u}) {
        for (double alpha : {0.2, 0.5, 0.8}) {
            DirectedGraph g = random_mixed(50, 4, seed);
            ScoreVector pi = exact_pagerank(g, alpha, 1e-12);
            auto ref = testing::dense_pagerank(g, alpha);
            for (NodeId v = 0; v < g.num_nodes(); ++v)
                CHECK(pi[v] == doctest::Approx(ref[v]).epsilon(1e-9));
        }
    }
}

TEST_CASE("pagerank satisfies the recursion residual, normalization, and floor") {
    const double tol = 1e-12;
    for (std::uint64_t seed : {4u, 17u}) {
        DirectedGraph g = random_mixed(80, 5, seed);
        const double alpha = 0.3;
        ScoreVector pi = exact_pagerank(g, alpha, tol);
        const NodeId n = g.num_nodes();
        double total = 0.0;
        std::vector<double> incoming(n, 0.0);
        for (NodeId u = 0; u < n; ++u) {
            total += pi[u];
            const auto nbrs = g.out_neighbors(u);
            for (NodeId w : nbrs) incoming[w] += (1.0 - alpha) * pi[u] / nbrs.size();
        }
        CHECK(std::abs(total - 1.0) <= 10 * tol);
        for (NodeId v = 0; v < n; ++v) {
            CHECK(std::abs(pi[v] - incoming[v] - alpha / n) <= 10 * tol);
            CHECK(pi[v] >= alpha / n - 10 * tol);
        }
    }
}

TEST_CASE("hop pagerank basics") {
    SUBCASE("zero-hop value is alpha/n on any graph") {
        DirectedGraph g = random_mixed(30, 3, 8);
        auto hops = hop_pagerank(g, 0.4, 5, 0);
        CHECK(hops[0] == doctest::Approx(0.4 / 30).epsilon(1e-12));
    }
    SUBCASE("two-cycle hops") {
        auto hops = hop_pagerank(testing::two_cycle(), 0.5, 0, 1);
        CHECK(hops[0] == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(hops[1] == doctest::Approx(0.125).epsilon(1e-12));
    }
    SUBCASE("hop series sums to pagerank on the chain") {
        DirectedGraph g = testing::three_chain();
        ScoreVector pi = exact_pagerank(g, 0.5, 1e-12);
        for (NodeId t = 0; t < 3; ++t) {
            auto hops = hop_pagerank(g, 0.5, t, 50);
            const double sum = std::accumulate(hops.begin(), hops.end(), 0.0);
            CHECK(sum == doctest::Approx(pi[t]).epsilon(1e-10));
        }
    }
    SUBCASE("hop distribution mass is alpha (1-alpha)^i") {
        DirectedGraph g = random_mixed(25, 4, 3);
        for (int i : {0, 1, 4}) {
            ScoreVector hop = hop_distribution(g, 0.3, i);
            double mass = std::accumulate(hop.values.begin(), hop.values.end(), 0.0);
            CHECK(mass == doctest::Approx(0.3 * std::pow(0.7, i)).epsilon(1e-12));
        }
    }
}

TEST_CASE("tail pagerank") {
    SUBCASE("tail from zero equals pagerank") {
        DirectedGraph g = random_mixed(40, 3, 12);
        ScoreVector pi = exact_pagerank(g, 0.5);
        ScoreVector tail = tail_pagerank(g, 0.5, 0);
        for (NodeId v = 0; v < g.num_nodes(); ++v)
            CHECK(tail[v] == doctest::Approx(pi[v]).epsilon(1e-10));
    }
    SUBCASE("two-cycle tail from one") {
        ScoreVector tail = tail_pagerank(testing::two_cycle(), 0.5, 1);
        CHECK(tail[0] == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("tails never exceed pagerank and prefix+tail reconstructs it") {
        DirectedGraph g = random_mixed(40, 4, 21);
        const double alpha = 0.4;
        ScoreVector pi = exact_pagerank(g, alpha, 1e-12);
        const int i_prime = 3;
        ScoreVector tail = tail_pagerank(g, alpha, i_prime, 1e-12);
        std::vector<double> prefix(g.num_nodes(), 0.0);
        for (int i = 0; i < i_prime; ++i) {
            ScoreVector hop = hop_distribution(g, alpha, i);
            for (NodeId v = 0; v < g.num_nodes(); ++v) prefix[v] += hop[v];
        }
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            CHECK(tail[v] <= pi[v] + 1e-12);
            CHECK(tail[v] + prefix[v] == doctest::Approx(pi[v]).epsilon(1e-9));
        }
    }
}

TEST_CASE("contributions") {
    SUBCASE("two-cycle hand values and dense route") {
        DirectedGraph g = testing::two_cycle();
        ScoreVector c = contributions_to(g, 0.5, 0);
        CHECK(c[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
        CHECK(c[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
        auto ref = testing::dense_contributions(g, 0.5, 0);
        CHECK(c[0] == doctest::Approx(ref[0]).epsilon(1e-10));
        CHECK(c[1] == doctest::Approx(ref[1]).epsilon(1e-10));
    }
    SUBCASE("self-contribution is at least alpha") {
        DirectedGraph g = random_mixed(30, 3, 6);
        for (NodeId t : {NodeId{0}, NodeId{7}, NodeId{29}})
            CHECK(contributions_to(g, 0.35, t)[t] >= 0.35 - 1e-12);
    }
    SUBCASE("unreachable component contributes zero") {
        // two separate self-loop islands
        DirectedGraph g = testing::make_graph(2, {{0, 0}, {1, 1}});
        CHECK(contributions_to(g, 0.5, 0)[1] == doctest::Approx(0.0));
    }
    SUBCASE("average contribution equals pagerank on graphs up to n=200") {
        const double tol = 1e-12;
        DirectedGraph g = random_mixed(200, 4, 18);
        const double alpha = 0.25;
        ScoreVector pi = exact_pagerank(g, alpha, tol);
        for (NodeId t : {NodeId{0}, NodeId{100}}) {
            ScoreVector c = contributions_to(g, alpha, t, tol);
            const double avg =
                std::accumulate(c.values.begin(), c.values.end(), 0.0) / g.num_nodes();
            CHECK(std::abs(avg - pi[t]) <= 10 * tol);
        }
    }
}

TEST_CASE("score CSV dump") {
    ScoreVector pi = exact_pagerank(testing::two_cycle(), 0.5);
    const std::string csv = scores_csv_string(pi);
    REQUIRE(csv.substr(0, 11) == "node,value\n");
    // two data rows, values round-trip to the stored doubles
    std::istringstream in(csv.substr(11));
    std::string line;
    NodeId row = 0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::stoul(line.substr(0, comma)) == row);
        CHECK(std::stod(line.substr(comma + 1)) == pi[row]);
        ++row;
    }
    CHECK(row == 2);
}

#include <cmath>

#include "doctest.h"
#include "prlocal/exact.hpp"
#include "prlocal/rounding_push.hpp"
#include "prlocal/synth.hpp"
#include "test_support.hpp"

using namespace prlocal;

namespace {

// Captures the partition and all operations of one run.
struct Recorder : RunObserver {
    Partition partition;
    McEstimates estimates;
    std::vector<std::pair<int, NodeId>> roundings;
    std::vector<std::pair<int, NodeId>> pushbacks;
    PushState final_state{1, 0, 0.5};
    double final_estimate = 0.0;

    void on_estimates(const McEstimates& e) override { estimates = e; }
    void on_partition(const Partition& p) override { partition = p; }
    void on_rounding(int level, NodeId v, double, double, const PushState&) override {
        roundings.emplace_back(level, v);
    }
    void on_pushback(int level, NodeId v, const PushState&) override {
        pushbacks.emplace_back(level, v);
    }
    void on_finish(const PushState& st, const McEstimates&, double est) override {
        final_state = st;
        final_estimate = est;
    }
};

}  // namespace

TEST_CASE("a large-side target short-circuits to its Monte Carlo estimate") {
    DirectedGraph g = testing::two_cycle();
    OracleSession s(g, 5);
    AlgoParams p = compute_params(2, 2, 1, 1, 0.5);
    p.epsilon = 1e-9;  // force both nodes onto the large side
    p.r_max = 0.5;
    Recorder rec;
    EstimateReport report = rounding_push_run(s, 0, p, &rec);
    CHECK(rec.pushbacks.empty());
    CHECK(rec.roundings.empty());
    CHECK(report.estimate == doctest::Approx(rec.estimates.value(0)).epsilon(1e-15));
}

TEST_CASE("rounding and pushback never touch the large side") {
    DirectedGraph g = random_regular(256, 2, 21);
    OracleSession s(g, 13);
    AlgoParams p = compute_params(256, 512, 2, 2, 0.5);
    // widen the walk budget and drop the threshold so both sides are nonempty
    p.n_r = 5000;
    p.epsilon = 20.0 * std::pow(0.5, p.i_prime) / 5000.0;
    p.r_max = 1.0 / 64.0;
    Recorder rec;
    rounding_push_run(s, 0, p, &rec);
    CHECK(!rec.partition.large.empty());
    for (const auto& [level, v] : rec.roundings) CHECK(!rec.partition.is_large(v));
    for (const auto& [level, v] : rec.pushbacks) CHECK(!rec.partition.is_large(v));
}

TEST_CASE("the estimate excludes residues parked at the final level") {
    DirectedGraph g = testing::two_cycle();
    OracleSession s(g, 3);
    AlgoParams p = compute_params(2, 2, 1, 1, 0.5);
    p.r_max = 1e-9;  // never round, push everything
    Recorder rec;
    EstimateReport report = rounding_push_run(s, 0, p, &rec);
    // recompute the estimate independently from the final state
    double recomputed = 0.0;
    for (int i = 0; i < p.levels; ++i) {
        for (const auto& [v, pr] : rec.final_state.reserves[i].entries()) recomputed += pr / 2;
        for (const auto& [v, r] : rec.final_state.residues[i].entries())
            recomputed += rec.estimates.value(v) * r;
    }
    CHECK(report.estimate == doctest::Approx(recomputed).epsilon(1e-15));
    // the final level holds the leftover residue mass and is excluded
    CHECK(rec.final_state.residues[p.levels].sum() ==
          doctest::Approx(std::pow(0.5, p.levels)).epsilon(1e-12));
    // deterministic push without rounding: estimate is the truncated series
    CHECK(report.estimate == doctest::Approx(0.5 * (1.0 - std::pow(0.5, p.levels))).epsilon(1e-12));
}

TEST_CASE("fixed seeds reproduce the full report") {
    DirectedGraph g = random_regular(128, 2, 8);
    AlgoParams p = compute_params(128, 256, 2, 2, 0.5);
    p.r_max = 1.0 / 16.0;
    OracleSession a(g, 77), b(g, 77);
    EstimateReport ra = rounding_push_run(a, 3, p);
    EstimateReport rb = rounding_push_run(b, 3, p);
    CHECK(ra.estimate == rb.estimate);
    CHECK(ra.queries == rb.queries);
    CHECK(ra.estimate >= 0.0);
}

TEST_CASE("r_max is required") {
    DirectedGraph g = testing::two_cycle();
    OracleSession s(g, 1);
    AlgoParams p = compute_params(2, 2, 1, 1, 0.5);
    CHECK_THROWS_AS(rounding_push_run(s, 0, p), std::invalid_argument);
}

TEST_CASE("single self-loop node stays within half relative error") {
    DirectedGraph g = testing::self_loop();
    AlgoParams p = compute_params(1, 1, 1, 1, 0.5);
    // ideal threshold from the known score pi(t) = 1
    p.r_max = 1.0 / (5000.0 * p.levels * p.epsilon);
    int ok = 0;
    const int runs = 100;
    for (int i = 0; i < runs; ++i) {
        OracleSession s(g, 1000 + i);
        EstimateReport r = rounding_push_run(s, 0, p);
        if (std::abs(r.estimate - 1.0) < 0.5) ++ok;
    }
    CHECK(ok >= 90);
}

TEST_CASE("adaptive schedule halves r_max and keeps the last completed run") {
    DirectedGraph g = testing::two_cycle();
    OracleSession s(g, 9);
    EstimateReport r = adaptive_estimate(s, 0, 2, 2, 1, 1, 0.5, /*budget_const=*/1e6);
    REQUIRE(r.r_max_schedule.size() >= 2);
    CHECK(r.r_max_schedule.front() == doctest::Approx(0.5));
    for (std::size_t i = 1; i < r.r_max_schedule.size(); ++i)
        CHECK(r.r_max_schedule[i] == doctest::Approx(r.r_max_schedule[i - 1] / 2));
    CHECK(*r.params.r_max == doctest::Approx(r.r_max_schedule.back()));
    CHECK(!r.budget_truncated);
    CHECK(r.queries.total() > 0);
}

TEST_CASE("a starved budget returns the first run flagged as truncated") {
    DirectedGraph g = testing::two_cycle();
    OracleSession s(g, 9);
    EstimateReport r = adaptive_estimate(s, 0, 2, 2, 1, 1, 0.5, /*budget_const=*/1e-3);
    CHECK(r.r_max_schedule.size() == 1);
    CHECK(r.budget_truncated);
    CHECK(*r.params.r_max == doctest::Approx(0.5));
}

TEST_CASE("event E check") {
    DirectedGraph g = testing::two_cycle();
    const double alpha = 0.5;
    const int i_prime = 1;
    ScoreVector tails = tail_pagerank(g, alpha, i_prime);  // 0.25 each
    McEstimates est;
    est.alpha = alpha;
    est.i_prime = i_prime;
    est.n_r = 100;
    SUBCASE("perfect estimates pass") {
        est.counts = {{0, 50}, {1, 50}};  // value 0.25 each
        CHECK(event_E_check(est, tails, 0.2).holds);
        CHECK(event_E_check(est, tails, 1.0).holds);
    }
    SUBCASE("an estimate far above its tail violates the relative band") {
        est.counts = {{0, 100}};  // value 0.5 = eps while the tail is 0.25
        EventEResult r = event_E_check(est, tails, 0.5);
        CHECK(!r.holds);
        REQUIRE(!r.violations.empty());
        CHECK(r.violations.front().node == 0);
        CHECK(r.violations.front().condition == 1);
    }
    SUBCASE("a heavy tail on the small side violates the cap") {
        est.counts = {};
        EventEResult r = event_E_check(est, tails, 0.1);
        CHECK(!r.holds);
        CHECK(r.violations.size() == 2);
        CHECK(r.violations.front().condition == 3);
    }
    SUBCASE("mismatched tail vectors are rejected") {
        ScoreVector wrong = tail_pagerank(g, alpha, 2);
        CHECK_THROWS_AS(event_E_check(est, wrong, 0.1), std::invalid_argument);
    }
}

#include "prlocal/json_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace prlocal {

namespace {

nlohmann::json queries_json(const QueryCounts& q) {
    return {{"indeg", q.indeg}, {"outdeg", q.outdeg}, {"parent", q.parent},
            {"child", q.child}, {"jump", q.jump},     {"total", q.total()}};
}

}  // namespace

std::string to_json_string(const EstimateReport& report) {
    nlohmann::json params{
        {"alpha", report.params.alpha},     {"gamma", report.params.gamma},
        {"i_star", report.params.i_star},   {"i_prime", report.params.i_prime},
        {"epsilon", report.params.epsilon}, {"n_r", report.params.n_r},
        {"L", report.params.levels},
    };
    if (report.params.r_max)
        params["r_max"] = *report.params.r_max;
    else
        params["r_max"] = nullptr;
    nlohmann::json j{
        {"estimate", report.estimate},
        {"queries", queries_json(report.queries)},
        {"params", std::move(params)},
        {"seed", report.seed},
        {"elapsed_ms", report.elapsed_ms},
        {"r_max_schedule", report.r_max_schedule},
        {"budget_truncated", report.budget_truncated},
    };
    return j.dump();
}

std::string to_json_string(const BaselineReport& report) {
    nlohmann::json config{{"n_walks", report.n_walks}};
    if (report.r_max > 0.0) config["r_max"] = report.r_max;
    nlohmann::json j{
        {"estimate", report.estimate},
        {"queries", queries_json(report.queries)},
        {"method", report.method},
        {"config", std::move(config)},
        {"seed", report.seed},
        {"elapsed_ms", report.elapsed_ms},
    };
    return j.dump();
}

std::string estimate_csv_header() {
    return "estimate,indeg,outdeg,parent,child,jump,total_queries,seed,elapsed_ms,r_max_schedule";
}

namespace {

std::string csv_common(double estimate, const QueryCounts& q, std::uint64_t seed,
                       double elapsed_ms, const std::string& schedule) {
    std::ostringstream out;
    out.precision(17);
    out << estimate << ',' << q.indeg << ',' << q.outdeg << ',' << q.parent << ',' << q.child
        << ',' << q.jump << ',' << q.total() << ',' << seed << ',' << elapsed_ms << ','
        << schedule;
    return out.str();
}

}  // namespace

std::string to_csv_row(const EstimateReport& report) {
    std::ostringstream sched;
    sched.precision(17);
    for (std::size_t i = 0; i < report.r_max_schedule.size(); ++i) {
        if (i) sched << ';';
        sched << report.r_max_schedule[i];
    }
    return csv_common(report.estimate, report.queries, report.seed, report.elapsed_ms,
                      sched.str());
}

std::string to_csv_row(const BaselineReport& report) {
    return csv_common(report.estimate, report.queries, report.seed, report.elapsed_ms, "");
}

}  // namespace prlocal

#pragma once

#include <string>

#include "prlocal/baselines.hpp"
#include "prlocal/rounding_push.hpp"

namespace prlocal {

// Report rows as emitted by the harness. Estimator reports carry the full
// parameter block; baseline reports mirror the same layout with a method tag
// and walk/threshold config instead.
std::string to_json_string(const EstimateReport& report);
std::string to_json_string(const BaselineReport& report);

std::string estimate_csv_header();
std::string to_csv_row(const EstimateReport& report);
std::string to_csv_row(const BaselineReport& report);

}  // namespace prlocal

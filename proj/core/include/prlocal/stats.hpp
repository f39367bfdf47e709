#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace prlocal {

inline double mean(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("mean of empty sample");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

// Standard error of the mean (sample standard deviation / sqrt(n)).
inline double standard_error(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double mu = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1) /
                     static_cast<double>(xs.size()));
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw std::invalid_argument("slope needs at least two points");
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0)) throw std::invalid_argument("log-log fit needs positive data");
        sx += std::log(x);
        sy += std::log(y);
    }
    const double mx = sx / points.size(), my = sy / points.size();
    double num = 0.0, den = 0.0;
    for (const auto& [x, y] : points) {
        const double dx = std::log(x) - mx;
        num += dx * (std::log(y) - my);
        den += dx * dx;
    }
    return num / den;
}

}  // namespace prlocal

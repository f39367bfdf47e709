#include "prlocal/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace prlocal {

double McEstimates::increment() const {
    return std::pow(1.0 - alpha, i_prime) / static_cast<double>(n_r);
}

double McEstimates::value(NodeId v) const {
    auto it = std::lower_bound(counts.begin(), counts.end(), v,
                               [](const auto& e, NodeId x) { return e.first < x; });
    if (it == counts.end() || it->first != v) return 0.0;
    return static_cast<double>(it->second) * increment();
}

double McEstimates::total_mass() const {
    std::uint64_t c = 0;
    for (const auto& [v, k] : counts) c += k;
    return static_cast<double>(c) * increment();
}

void McEstimates::merge(const McEstimates& other) {
    if (alpha != other.alpha || i_prime != other.i_prime)
        throw std::invalid_argument("cannot merge estimates with different alpha or i_prime");
    std::vector<std::pair<NodeId, std::uint64_t>> merged;
    merged.reserve(counts.size() + other.counts.size());
    auto a = counts.begin();
    auto b = other.counts.begin();
    while (a != counts.end() || b != other.counts.end()) {
        if (b == other.counts.end() || (a != counts.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == counts.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            merged.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    counts = std::move(merged);
    n_r += other.n_r;
}

NodeId sample_extended_walk(OracleSession& session, double alpha, int i_prime) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
    if (i_prime < 0) throw std::invalid_argument("i_prime must be nonnegative");
    OracleScope scope;
    Rng& rng = session.algo_rng();
    NodeId v = session.jump();
    while (!rng.bernoulli(alpha)) {
        const NodeId d = session.outdeg(v);
        v = session.child(v, static_cast<NodeId>(rng.below(d)) + 1);
    }
    for (int i = 0; i < i_prime; ++i) {
        const NodeId d = session.outdeg(v);
        v = session.child(v, static_cast<NodeId>(rng.below(d)) + 1);
    }
    return v;
}

McEstimates monte_carlo(OracleSession& session, double alpha, std::uint64_t n_r, int i_prime) {
    if (n_r < 1) throw std::invalid_argument("n_r must be >= 1");
    std::unordered_map<NodeId, std::uint64_t> hits;
    for (std::uint64_t k = 0; k < n_r; ++k) ++hits[sample_extended_walk(session, alpha, i_prime)];
    McEstimates est;
    est.alpha = alpha;
    est.i_prime = i_prime;
    est.n_r = n_r;
    est.counts.assign(hits.begin(), hits.end());
    std::sort(est.counts.begin(), est.counts.end());
    return est;
}

std::string estimates_csv_string(const McEstimates& estimates) {
    std::ostringstream out;
    out << "node,value\n";
    out.precision(17);
    const double inc = estimates.increment();
    for (const auto& [v, c] : estimates.counts) out << v << ',' << c * inc << '\n';
    return out.str();
}

}  // namespace prlocal

#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prlocal/graph.hpp"

namespace prlocal {

// Sparse node->double map with deterministic (insertion-order) iteration.
// Missing keys read as 0. Entries may hold 0 after being zeroed; iteration
// helpers skip them, so the observable map always satisfies absent <=> 0.
class SparseVec {
  public:
    double value(NodeId v) const {
        auto it = index_.find(v);
        return it == index_.end() ? 0.0 : items_[it->second].second;
    }

    void add(NodeId v, double delta) { slot(v) += delta; }
    void set(NodeId v, double x) { slot(v) = x; }

    // Insertion-ordered view, zero entries included.
    const std::vector<std::pair<NodeId, double>>& entries() const { return items_; }

    std::vector<NodeId> nonzero_keys_sorted() const {
        std::vector<NodeId> keys;
        keys.reserve(items_.size());
        for (const auto& [v, x] : items_)
            if (x != 0.0) keys.push_back(v);
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    double sum() const {
        double s = 0.0;
        for (const auto& [v, x] : items_) s += x;
        return s;
    }

    std::size_t nonzero_count() const {
        std::size_t c = 0;
        for (const auto& [v, x] : items_)
            if (x != 0.0) ++c;
        return c;
    }

    bool empty() const { return items_.empty(); }

  private:
    double& slot(NodeId v) {
        auto [it, inserted] = index_.try_emplace(v, items_.size());
        if (inserted) items_.emplace_back(v, 0.0);
        return items_[it->second].second;
    }

    std::vector<std::pair<NodeId, double>> items_;
    std::unordered_map<NodeId, std::size_t> index_;
};

}  // namespace prlocal

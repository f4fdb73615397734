#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cadm {

// Co-occurrence counts between predicted clusters and true classes
// (k_pred x k_true, sizes inferred from the label ranges).
std::vector<std::vector<std::int64_t>> contingency(std::span<const std::int32_t> pred,
                                                   std::span<const std::int32_t> truth);

// Minimum-cost assignment of rows to columns. Rectangular inputs are
// zero-padded to square internally; the returned vector maps each (padded) row
// to its column. Optimal, not greedy.
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost);

// Fraction of objects correctly labeled under the best one-to-one matching
// between predicted clusters and true classes.
double clustering_accuracy(std::span<const std::int32_t> pred, std::span<const std::int32_t> truth);

struct RunSummary {
    double ca_mean = 0.0;
    double ca_std = 0.0;  // sample standard deviation (n-1)
    int runs = 0;
    double seconds_mean = 0.0;
};

// Mean +- std aggregation of (accuracy, wall-time) pairs across repeated runs.
RunSummary summarize(const std::vector<std::pair<double, double>>& ca_and_seconds);

}  // namespace cadm

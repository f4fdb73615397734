#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cadm/dataset.hpp"
#include "cadm/metrics.hpp"

namespace cadm {

// Cluster centers: one categorical code per categorical attribute and one
// numeric value (the cluster mean) per numeric attribute.
struct Centers {
    int k = 0, d_cat = 0, d_num = 0;
    std::vector<std::int32_t> codes;     // [l * d_cat + r], -1 when undefined
    std::vector<double> numerics;        // [l * d_num + j]
    std::vector<std::uint8_t> defined_;  // [l]

    std::int32_t code(int l, int r) const { return codes[static_cast<std::size_t>(l) * d_cat + r]; }
    double numeric(int l, int j) const { return numerics[static_cast<std::size_t>(l) * d_num + j]; }
    bool defined(int l) const { return defined_[l] != 0; }

    bool operator==(const Centers&) const = default;
};

// Centers whose entries are copies of the given object rows.
Centers centers_from_rows(const Dataset& ds, std::span<const int> rows);

enum class ConvergenceReason { centers_stable, labels_stable, cycle_detected, max_iter };

std::string_view to_string(ConvergenceReason reason);

struct RunLimits {
    int max_iter = 100;
};

struct ClusteringResult {
    std::vector<std::int32_t> labels;
    Centers centers;
    std::vector<double> objective_trace;  // one entry per iteration
    int iterations = 0;
    ConvergenceReason converged_by = ConvergenceReason::max_iter;
    double elapsed_seconds = 0.0;
};

// Picks k distinct object rows uniformly without replacement under the seed.
// Throws if k exceeds n or the number of distinct rows.
Centers init_centers(const Dataset& ds, int k, std::uint64_t seed);

// One-off initial assignment to the Hamming-nearest center (ties to the lowest
// cluster id). Cluster statistics do not exist yet at this point.
std::vector<std::int32_t> bootstrap_assign(const Dataset& ds, const Centers& centers);

struct AssignOutcome {
    std::vector<std::int32_t> labels;
    double objective = 0.0;        // sum of assigned-center distances
    std::vector<double> distances; // per-object assigned distance
};

// Maps every object to its nearest center under the configured metric, skipping
// empty clusters. Ties go to the lowest cluster id. Throws if no cluster is
// assignable.
AssignOutcome assign(const Dataset& ds, const Centers& centers, const ClusterStats& stats,
                     const MetricConfig& cfg);

// Per-cluster per-attribute modes (ties to the lowest code) and numeric means.
// An empty cluster's center is left undefined.
Centers update_centers(const Dataset& ds, std::span<const std::int32_t> labels, int k);

// Sum of each object's distance to its assigned center. Diagnostic companion
// of the trace; pure.
double objective(const Dataset& ds, std::span<const std::int32_t> labels, const Centers& centers,
                 const ClusterStats& stats, const MetricConfig& cfg);

// Full clustering: seeded initialization, Hamming bootstrap, then iterate
// rebuild-stats / assign / update-centers until centers or labels repeat, a
// previously seen label vector recurs, or max_iter. Clusters emptied by an
// assignment are re-seeded from the object farthest from its assigned center
// before centers are updated, so every cluster is non-empty at iteration end.
ClusteringResult run(const Dataset& ds, int k, std::uint64_t seed, const MetricConfig& cfg,
                     const RunLimits& limits = {});

}  // namespace cadm

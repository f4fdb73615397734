#include "cadm/cluster.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace cadm {

std::string_view to_string(ConvergenceReason reason) {
    switch (reason) {
        case ConvergenceReason::centers_stable: return "centers_stable";
        case ConvergenceReason::labels_stable: return "labels_stable";
        case ConvergenceReason::cycle_detected: return "cycle_detected";
        case ConvergenceReason::max_iter: return "max_iter";
    }
    return "?";
}

Centers centers_from_rows(const Dataset& ds, std::span<const int> rows) {
    Centers c;
    c.k = static_cast<int>(rows.size());
    c.d_cat = ds.d_cat();
    c.d_num = ds.d_num();
    c.codes.resize(static_cast<std::size_t>(c.k) * c.d_cat);
    c.numerics.resize(static_cast<std::size_t>(c.k) * c.d_num);
    c.defined_.assign(c.k, 1);
    for (int l = 0; l < c.k; ++l) {
        for (int r = 0; r < c.d_cat; ++r)
            c.codes[static_cast<std::size_t>(l) * c.d_cat + r] = ds.code(rows[l], r);
        for (int j = 0; j < c.d_num; ++j)
            c.numerics[static_cast<std::size_t>(l) * c.d_num + j] = ds.numeric(rows[l], j);
    }
    return c;
}

Centers init_centers(const Dataset& ds, int k, std::uint64_t seed) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    if (k > ds.n())
        throw std::invalid_argument("k = " + std::to_string(k) + " exceeds n = " +
                                    std::to_string(ds.n()));
    std::vector<int> order(ds.n());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<int> picked;
    picked.reserve(k);
    for (int i : order) {
        bool dup = std::any_of(picked.begin(), picked.end(),
                               [&](int p) { return ds.rows_equal(p, i); });
        if (!dup) {
            picked.push_back(i);
            if (static_cast<int>(picked.size()) == k) break;
        }
    }
    if (static_cast<int>(picked.size()) < k)
        throw std::invalid_argument("dataset has fewer than k distinct rows");
    return centers_from_rows(ds, picked);
}

std::vector<std::int32_t> bootstrap_assign(const Dataset& ds, const Centers& centers) {
    std::vector<std::int32_t> labels(ds.n());
    for (int i = 0; i < ds.n(); ++i) {
        int best = 0;
        double best_d = hamming_distance(ds, i, centers, 0);
        for (int l = 1; l < centers.k; ++l) {
            double d = hamming_distance(ds, i, centers, l);
            if (d < best_d) {
                best_d = d;
                best = l;
            }
        }
        labels[i] = best;
    }
    return labels;
}

AssignOutcome assign(const Dataset& ds, const Centers& centers, const ClusterStats& stats,
                     const MetricConfig& cfg) {
    AssignOutcome out;
    out.labels.resize(ds.n());
    out.distances.resize(ds.n());
    for (int i = 0; i < ds.n(); ++i) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int l = 0; l < centers.k; ++l) {
            if (!centers.defined(l) || stats.empty_cluster(l)) continue;
            double d = object_center_distance(ds, stats, cfg, i, l, centers);
            if (d < best_d) {
                best_d = d;
                best = l;
            }
        }
        if (best < 0) throw std::runtime_error("no assignable cluster");
        out.labels[i] = best;
        out.distances[i] = best_d;
        out.objective += best_d;
    }
    return out;
}

Centers update_centers(const Dataset& ds, std::span<const std::int32_t> labels, int k) {
    ClusterStats stats = build_cluster_stats(ds, labels, k);
    Centers c;
    c.k = k;
    c.d_cat = ds.d_cat();
    c.d_num = ds.d_num();
    c.codes.assign(static_cast<std::size_t>(k) * c.d_cat, -1);
    c.numerics.assign(static_cast<std::size_t>(k) * c.d_num, 0.0);
    c.defined_.assign(k, 0);
    for (int l = 0; l < k; ++l) {
        if (stats.empty_cluster(l)) continue;
        c.defined_[l] = 1;
        for (int r = 0; r < c.d_cat; ++r)
            c.codes[static_cast<std::size_t>(l) * c.d_cat + r] = stats.mode(l, r);
        for (int j = 0; j < c.d_num; ++j)
            c.numerics[static_cast<std::size_t>(l) * c.d_num + j] = stats.mean(l, j);
    }
    return c;
}

double objective(const Dataset& ds, std::span<const std::int32_t> labels, const Centers& centers,
                 const ClusterStats& stats, const MetricConfig& cfg) {
    double total = 0.0;
    for (int i = 0; i < ds.n(); ++i)
        total += object_center_distance(ds, stats, cfg, i, labels[i], centers);
    return total;
}

namespace {

// A cluster emptied by the assignment is re-seeded with the globally farthest
// object whose current cluster can spare it (size >= 2). The moved object's
// recorded distance drops to zero: it now sits on its own center.
void reseed_empty_clusters(AssignOutcome& out, int k) {
    std::vector<std::int64_t> sizes(k, 0);
    for (std::int32_t l : out.labels) ++sizes[l];
    for (int l = 0; l < k; ++l) {
        if (sizes[l] != 0) continue;
        int victim = -1;
        double far_d = -1.0;
        for (int i = 0; i < static_cast<int>(out.labels.size()); ++i)
            if (sizes[out.labels[i]] >= 2 && out.distances[i] > far_d) {
                far_d = out.distances[i];
                victim = i;
            }
        if (victim < 0) throw std::runtime_error("cannot re-seed empty cluster " + std::to_string(l));
        --sizes[out.labels[victim]];
        out.labels[victim] = l;
        sizes[l] = 1;
        out.distances[victim] = 0.0;
    }
}

}  // namespace

ClusteringResult run(const Dataset& ds, int k, std::uint64_t seed, const MetricConfig& cfg,
                     const RunLimits& limits) {
    if (limits.max_iter <= 0) throw std::invalid_argument("max_iter must be positive");
    auto t0 = std::chrono::steady_clock::now();

    ClusteringResult res;
    res.labels = bootstrap_assign(ds, init_centers(ds, k, seed));
    // Seed rows only steer the bootstrap; from here on centers always summarize
    // the previous iteration's partition.
    res.centers = update_centers(ds, res.labels, k);

    std::set<std::vector<std::int32_t>> seen;
    seen.insert(res.labels);

    for (int iter = 1; iter <= limits.max_iter; ++iter) {
        ClusterStats stats = build_cluster_stats(ds, res.labels, k);
        AssignOutcome out = assign(ds, res.centers, stats, cfg);
        res.objective_trace.push_back(out.objective);
        reseed_empty_clusters(out, k);
        Centers next_centers = update_centers(ds, out.labels, k);

        bool centers_same = next_centers == res.centers;
        bool labels_same = out.labels == res.labels;
        bool cycled = seen.count(out.labels) != 0;

        res.iterations = iter;
        res.labels = std::move(out.labels);
        res.centers = std::move(next_centers);

        if (centers_same) {
            res.converged_by = ConvergenceReason::centers_stable;
            break;
        }
        if (labels_same) {
            res.converged_by = ConvergenceReason::labels_stable;
            break;
        }
        if (cycled) {
            res.converged_by = ConvergenceReason::cycle_detected;
            break;
        }
        res.converged_by = ConvergenceReason::max_iter;
        seen.insert(res.labels);
    }

    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace cadm

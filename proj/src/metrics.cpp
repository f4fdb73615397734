#include "cadm/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cadm/cluster.hpp"

namespace cadm {

std::string_view to_string(CaiMode mode) {
    switch (mode) {
        case CaiMode::off: return "off";
        case CaiMode::additive: return "additive";
        case CaiMode::multiplicative: return "multiplicative";
    }
    return "?";
}

CaiMode cai_mode_from_string(std::string_view s) {
    if (s == "off") return CaiMode::off;
    if (s == "additive") return CaiMode::additive;
    if (s == "multiplicative") return CaiMode::multiplicative;
    throw std::invalid_argument("unknown cai mode: '" + std::string(s) + "'");
}

ClusterStats build_cluster_stats(const Dataset& ds, std::span<const std::int32_t> labels, int k) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    if (labels.size() != static_cast<std::size_t>(ds.n()))
        throw std::invalid_argument("label count does not match n");

    ClusterStats stats;
    stats.k = k;
    stats.d_cat = ds.d_cat();
    stats.d_num = ds.d_num();
    stats.n = ds.n();
    stats.global = global_counts(ds);
    stats.sizes.assign(k, 0);
    stats.counts.resize(ds.d_cat());
    stats.ordinal.resize(ds.d_cat());
    for (int r = 0; r < ds.d_cat(); ++r) {
        stats.counts[r].assign(static_cast<std::size_t>(k) * ds.cardinality(r), 0);
        stats.ordinal[r] = ds.is_ordinal(r) ? 1 : 0;
    }
    stats.means.assign(static_cast<std::size_t>(k) * ds.d_num(), 0.0);

    for (int i = 0; i < ds.n(); ++i) {
        std::int32_t l = labels[i];
        if (l < 0 || l >= k)
            throw std::invalid_argument("label " + std::to_string(l) + " outside [0, k)");
        ++stats.sizes[l];
        for (int r = 0; r < ds.d_cat(); ++r)
            ++stats.counts[r][static_cast<std::size_t>(l) * ds.cardinality(r) + ds.code(i, r)];
        for (int j = 0; j < ds.d_num(); ++j)
            stats.means[static_cast<std::size_t>(l) * ds.d_num() + j] += ds.numeric(i, j);
    }

    stats.modes.assign(static_cast<std::size_t>(k) * ds.d_cat(), -1);
    for (int l = 0; l < k; ++l) {
        if (stats.sizes[l] == 0) continue;
        for (int r = 0; r < ds.d_cat(); ++r) {
            std::int32_t best = 0;
            for (std::int32_t v = 1; v < ds.cardinality(r); ++v)
                if (stats.count(l, r, v) > stats.count(l, r, best)) best = v;
            stats.modes[static_cast<std::size_t>(l) * ds.d_cat() + r] = best;
        }
        for (int j = 0; j < ds.d_num(); ++j)
            stats.means[static_cast<std::size_t>(l) * ds.d_num() + j] /=
                static_cast<double>(stats.sizes[l]);
    }
    return stats;
}

double cvi(const ClusterStats& stats, int l, int r, std::int32_t value) {
    return static_cast<double>(stats.count(l, r, value)) /
           static_cast<double>(stats.global.max_count[r]);
}

double rival_factor(const ClusterStats& stats, int l, int r, std::int32_t value, RivalRole role) {
    if (role == RivalRole::center_value) return cvi(stats, l, r, value);
    std::int64_t c = std::max<std::int64_t>(stats.count(l, r, value), 1);
    return static_cast<double>(stats.global.max_count[r]) / static_cast<double>(c);
}

double cvd(const ClusterStats& stats, int l, int r, std::int32_t s, std::int32_t p) {
    if (s == p) return 0.0;
    return rival_factor(stats, l, r, s, RivalRole::rival_value) +
           rival_factor(stats, l, r, p, RivalRole::center_value);
}

double attr_value_distance(const ClusterStats& stats, const MetricConfig& cfg, int l, int r,
                           std::int32_t x_code, std::int32_t c_code) {
    if (x_code == c_code) return 0.0;
    if (stats.is_ordinal(r) && cfg.use_order_info) {
        // Walk every rank between the two values so that a longer rank gap
        // accumulates more ground to cover; the center's own rank adds nothing.
        std::int32_t lo = std::min(x_code, c_code), hi = std::max(x_code, c_code);
        double sum = 0.0;
        for (std::int32_t v = lo; v <= hi; ++v) {
            if (v == c_code) continue;
            sum += cfg.use_cvd ? cvd(stats, l, r, v, c_code) : 1.0;
        }
        return sum;
    }
    return cfg.use_cvd ? cvd(stats, l, r, x_code, c_code) : 1.0;
}

double cai(const ClusterStats& stats, int l, int r) {
    std::int64_t best = 0;
    int v_r = static_cast<int>(stats.counts[r].size()) / stats.k;
    for (std::int32_t v = 0; v < v_r; ++v) best = std::max(best, stats.count(l, r, v));
    return static_cast<double>(best) / static_cast<double>(stats.n);
}

double attr_importance(const ClusterStats& stats, int l, int r) {
    double a = cai(stats, l, r);
    return a * a;
}

namespace {

double combined_distance(const Dataset& ds, const ClusterStats& stats, const MetricConfig& cfg,
                         int i, int l, const std::int32_t* center_codes,
                         const double* center_nums) {
    double total = 0.0;
    for (int r = 0; r < ds.d_cat(); ++r) {
        double dm = attr_value_distance(stats, cfg, l, r, ds.code(i, r), center_codes[r]);
        switch (cfg.cai_mode) {
            case CaiMode::off: total += dm; break;
            case CaiMode::additive: total += dm + attr_importance(stats, l, r); break;
            case CaiMode::multiplicative: total += dm * (1.0 + attr_importance(stats, l, r)); break;
        }
    }
    for (int j = 0; j < ds.d_num(); ++j) {
        double diff = ds.numeric(i, j) - center_nums[j];
        total += cfg.numeric_weight * diff * diff;
    }
    return total;
}

}  // namespace

double object_center_distance(const Dataset& ds, const ClusterStats& stats, const MetricConfig& cfg,
                              int i, int l, const Centers& centers) {
    return combined_distance(ds, stats, cfg, i, l,
                             centers.codes.data() + static_cast<std::size_t>(l) * centers.d_cat,
                             centers.numerics.data() + static_cast<std::size_t>(l) * centers.d_num);
}

double object_center_distance(const Dataset& ds, const ClusterStats& stats, const MetricConfig& cfg,
                              int i, int l) {
    if (stats.empty_cluster(l))
        throw std::invalid_argument("cluster " + std::to_string(l) + " is empty; center undefined");
    return combined_distance(ds, stats, cfg, i, l,
                             stats.modes.data() + static_cast<std::size_t>(l) * stats.d_cat,
                             stats.means.data() + static_cast<std::size_t>(l) * stats.d_num);
}

double hamming_distance(const Dataset& ds, int i, const Centers& centers, int l,
                        double numeric_weight) {
    double total = 0.0;
    for (int r = 0; r < ds.d_cat(); ++r)
        if (ds.code(i, r) != centers.code(l, r)) total += 1.0;
    for (int j = 0; j < ds.d_num(); ++j) {
        double diff = ds.numeric(i, j) - centers.numeric(l, j);
        total += numeric_weight * diff * diff;
    }
    return total;
}

}  // namespace cadm

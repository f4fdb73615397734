#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cadm/dataset.hpp"

namespace cadm {

enum class CaiMode { off, additive, multiplicative };

std::string_view to_string(CaiMode mode);
CaiMode cai_mode_from_string(std::string_view s);

// Switches of the distance metric. The named presets form the ablation ladder:
// hdm (plain mismatch counting), dm1 (ordinal rank differences), dm2 (adds the
// cluster-customized value distance), cadm (adds the attribute-importance term).
struct MetricConfig {
    bool use_order_info = true;    // telescoping sum over intermediate ordinal values
    bool use_cvd = true;           // cluster-customized value distance vs. unit steps
    CaiMode cai_mode = CaiMode::additive;
    double numeric_weight = 1.0;   // weight of the squared numeric term

    static MetricConfig hdm() { return {false, false, CaiMode::off, 1.0}; }
    static MetricConfig dm1() { return {true, false, CaiMode::off, 1.0}; }
    static MetricConfig dm2() { return {true, true, CaiMode::off, 1.0}; }
    static MetricConfig cadm() { return {true, true, CaiMode::additive, 1.0}; }

    bool operator==(const MetricConfig&) const = default;
};

// Per-cluster, per-attribute tallies over a fixed label vector, frozen after
// construction. Distance functions are pure reads and may run concurrently.
struct ClusterStats {
    int k = 0;
    int d_cat = 0, d_num = 0;
    std::int64_t n = 0;
    std::vector<std::vector<std::int64_t>> counts;  // [r][l * v_r + value]
    std::vector<std::int64_t> sizes;                // [l]
    std::vector<std::int32_t> modes;                // [l * d_cat + r], -1 for empty clusters
    std::vector<double> means;                      // [l * d_num + j]
    std::vector<std::uint8_t> ordinal;              // [r]
    GlobalCounts global;

    std::int64_t count(int l, int r, std::int32_t value) const {
        return counts[r][static_cast<std::size_t>(l) * (counts[r].size() / k) + value];
    }
    std::int64_t size(int l) const { return sizes[l]; }
    bool empty_cluster(int l) const { return sizes[l] == 0; }
    std::int32_t mode(int l, int r) const { return modes[static_cast<std::size_t>(l) * d_cat + r]; }
    double mean(int l, int j) const { return means[static_cast<std::size_t>(l) * d_num + j]; }
    bool is_ordinal(int r) const { return ordinal[r] != 0; }
};

// Tallies codes per (cluster, attribute, value), cluster sizes, modes (ties
// broken by lowest code) and numeric means. Empty clusters are permitted:
// size 0, mode -1. Throws on a label outside [0, k).
ClusterStats build_cluster_stats(const Dataset& ds, std::span<const std::int32_t> labels, int k);

// Relative importance of value `value` of attribute r inside cluster l:
// its in-cluster count over the whole-dataset maximum count of that attribute.
// Always in [0, 1].
double cvi(const ClusterStats& stats, int l, int r, std::int32_t value);

enum class RivalRole { center_value, rival_value };

// Weight contributed by one side of a value pair. The center value contributes
// its cvi; the rival value contributes the reciprocal of its cvi, with the
// rival count clamped to at least 1 so the reciprocal stays finite.
double rival_factor(const ClusterStats& stats, int l, int r, std::int32_t value, RivalRole role);

// Cluster-customized distance from value s to the center value p: the sum of
// both rival factors, zero at equality. Asymmetric by construction; it is a
// point-to-center divergence, not a metric on value pairs.
double cvd(const ClusterStats& stats, int l, int r, std::int32_t s, std::int32_t p);

// Distance between an object's value and the center's value of one categorical
// attribute. Ordinal attributes with use_order_info sum the cvd of every value
// between the two (inclusive); with use_cvd off each non-center step counts 1,
// which degrades to rank difference (ordinal) and 0/1 mismatch (nominal).
double attr_value_distance(const ClusterStats& stats, const MetricConfig& cfg, int l, int r,
                           std::int32_t x_code, std::int32_t c_code);

// Cohesion of attribute r inside cluster l: the maximal in-cluster value count
// over the total dataset size n (hence at most size(l)/n).
double cai(const ClusterStats& stats, int l, int r);

// Attribute importance term: cai squared.
double attr_importance(const ClusterStats& stats, int l, int r);

struct Centers;

// Full object-to-center dissimilarity: per-attribute value distances combined
// with the attribute-importance term per cai_mode, plus the weighted squared
// distance of normalized numerics to the center's numeric entries.
double object_center_distance(const Dataset& ds, const ClusterStats& stats, const MetricConfig& cfg,
                              int i, int l, const Centers& centers);

// Same, with the center taken from the stats' own modes and means. Throws on
// an empty cluster (its mode is undefined).
double object_center_distance(const Dataset& ds, const ClusterStats& stats, const MetricConfig& cfg,
                              int i, int l);

// Plain mismatch count over categorical attributes plus the weighted squared
// numeric differences. Baseline metric, also used for the bootstrap assignment.
double hamming_distance(const Dataset& ds, int i, const Centers& centers, int l,
                        double numeric_weight = 1.0);

}  // namespace cadm

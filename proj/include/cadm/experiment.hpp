#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cadm/cluster.hpp"
#include "cadm/dataset.hpp"
#include "cadm/metrics.hpp"

namespace cadm {

struct VariantSpec {
    std::string name;
    MetricConfig config;
};

// Named preset lookup: hdm | dm1 | dm2 | cadm.
VariantSpec variant_preset(const std::string& name);

struct ExperimentConfig {
    std::string data_path;
    std::string schema_path;
    bool header = false;
    int k = 2;
    std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<VariantSpec> variants;
    RunLimits limits;
};

nlohmann::json metric_config_to_json(const MetricConfig& cfg);
MetricConfig metric_config_from_json(const nlohmann::json& j);

// Runs every variant x seed combination on an already-loaded dataset and
// returns the report document: one record per run (accuracy when true labels
// exist, iterations, convergence reason, wall time) plus per-variant
// mean +- std summaries. A failed run is recorded in place of aborting the
// batch. Deterministic apart from the timing fields.
nlohmann::json run_experiment(const Dataset& ds, const ExperimentConfig& cfg);

// Loads the dataset named by the config, then runs it.
nlohmann::json run_experiment(const ExperimentConfig& cfg);

// The dm1 / dm2 / cadm ladder with shared seeds, for ablation comparisons.
nlohmann::json ablation_suite(const Dataset& ds, int k, const std::vector<std::uint64_t>& seeds,
                              const RunLimits& limits = {});

// Human-readable variant table printed next to the JSON report.
void print_report_table(const nlohmann::json& report, std::ostream& out);

// True when every run in the report failed.
bool all_runs_failed(const nlohmann::json& report);

}  // namespace cadm

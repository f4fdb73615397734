#include "cadm/experiment.hpp"

#include <exception>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "cadm/evaluation.hpp"

namespace cadm {

VariantSpec variant_preset(const std::string& name) {
    if (name == "hdm") return {name, MetricConfig::hdm()};
    if (name == "dm1") return {name, MetricConfig::dm1()};
    if (name == "dm2") return {name, MetricConfig::dm2()};
    if (name == "cadm") return {name, MetricConfig::cadm()};
    throw std::invalid_argument("unknown variant '" + name + "' (expected hdm|dm1|dm2|cadm)");
}

nlohmann::json metric_config_to_json(const MetricConfig& cfg) {
    return {{"use_order_info", cfg.use_order_info},
            {"use_cvd", cfg.use_cvd},
            {"cai_mode", std::string(to_string(cfg.cai_mode))},
            {"numeric_weight", cfg.numeric_weight}};
}

MetricConfig metric_config_from_json(const nlohmann::json& j) {
    MetricConfig cfg;
    cfg.use_order_info = j.value("use_order_info", cfg.use_order_info);
    cfg.use_cvd = j.value("use_cvd", cfg.use_cvd);
    if (j.contains("cai_mode")) cfg.cai_mode = cai_mode_from_string(j.at("cai_mode").get<std::string>());
    cfg.numeric_weight = j.value("numeric_weight", cfg.numeric_weight);
    if (cfg.numeric_weight < 0.0) throw std::invalid_argument("numeric_weight must be nonnegative");
    return cfg;
}

nlohmann::json run_experiment(const Dataset& ds, const ExperimentConfig& cfg) {
    if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
    if (cfg.seeds.empty()) throw std::invalid_argument("at least one seed is required");
    if (cfg.variants.empty()) throw std::invalid_argument("at least one variant is required");

    nlohmann::json report;
    report["config"] = {{"data", cfg.data_path},
                        {"schema", cfg.schema_path},
                        {"header", cfg.header},
                        {"k", cfg.k},
                        {"max_iter", cfg.limits.max_iter},
                        {"seeds", cfg.seeds}};
    nlohmann::json variants = nlohmann::json::array();
    for (const auto& v : cfg.variants)
        variants.push_back({{"name", v.name}, {"metric", metric_config_to_json(v.config)}});
    report["config"]["variants"] = variants;
    report["dataset"] = {{"n", ds.n()},
                         {"d_cat", ds.d_cat()},
                         {"d_num", ds.d_num()},
                         {"has_labels", ds.has_labels()}};

    nlohmann::json runs = nlohmann::json::array();
    nlohmann::json summaries = nlohmann::json::array();
    for (const auto& variant : cfg.variants) {
        std::vector<std::pair<double, double>> ca_secs;
        double seconds_total = 0.0;
        int ok = 0;
        for (std::uint64_t seed : cfg.seeds) {
            nlohmann::json rec = {{"variant", variant.name}, {"seed", seed}};
            try {
                ClusteringResult res = run(ds, cfg.k, seed, variant.config, cfg.limits);
                rec["iterations"] = res.iterations;
                rec["converged_by"] = std::string(to_string(res.converged_by));
                rec["objective"] = res.objective_trace.back();
                rec["seconds"] = res.elapsed_seconds;
                if (ds.has_labels()) {
                    double ca = clustering_accuracy(res.labels, ds.labels_true());
                    rec["ca"] = ca;
                    ca_secs.emplace_back(ca, res.elapsed_seconds);
                }
                seconds_total += res.elapsed_seconds;
                ++ok;
            } catch (const std::exception& e) {
                rec["error"] = e.what();
            }
            runs.push_back(std::move(rec));
        }
        nlohmann::json summary = {{"variant", variant.name}, {"runs", ok}};
        if (ds.has_labels() && !ca_secs.empty()) {
            RunSummary s = summarize(ca_secs);
            summary["ca_mean"] = s.ca_mean;
            summary["ca_std"] = s.ca_std;
            summary["seconds_mean"] = s.seconds_mean;
        } else if (ok > 0) {
            summary["seconds_mean"] = seconds_total / ok;
        }
        summaries.push_back(std::move(summary));
    }
    report["runs"] = std::move(runs);
    report["summaries"] = std::move(summaries);
    return report;
}

nlohmann::json run_experiment(const ExperimentConfig& cfg) {
    Schema schema = parse_schema_file(cfg.schema_path);
    Dataset ds = load_dataset_file(cfg.data_path, schema, LoadOptions{cfg.header});
    return run_experiment(ds, cfg);
}

nlohmann::json ablation_suite(const Dataset& ds, int k, const std::vector<std::uint64_t>& seeds,
                              const RunLimits& limits) {
    ExperimentConfig cfg;
    cfg.k = k;
    cfg.seeds = seeds;
    cfg.limits = limits;
    cfg.variants = {variant_preset("dm1"), variant_preset("dm2"), variant_preset("cadm")};
    return run_experiment(ds, cfg);
}

void print_report_table(const nlohmann::json& report, std::ostream& out) {
    out << std::left << std::setw(10) << "variant" << std::right << std::setw(6) << "runs"
        << std::setw(12) << "ca_mean" << std::setw(12) << "ca_std" << std::setw(14) << "sec_mean"
        << '\n';
    for (const auto& s : report.at("summaries")) {
        out << std::left << std::setw(10) << s.at("variant").get<std::string>() << std::right
            << std::setw(6) << s.at("runs").get<int>();
        if (s.contains("ca_mean")) {
            out << std::setw(12) << std::fixed << std::setprecision(4) << s.at("ca_mean").get<double>()
                << std::setw(12) << s.at("ca_std").get<double>();
        } else {
            out << std::setw(12) << "-" << std::setw(12) << "-";
        }
        if (s.contains("seconds_mean"))
            out << std::setw(14) << std::setprecision(6) << s.at("seconds_mean").get<double>();
        else
            out << std::setw(14) << "-";
        out << '\n';
        out.unsetf(std::ios::fixed);
    }
}

bool all_runs_failed(const nlohmann::json& report) {
    const auto& runs = report.at("runs");
    if (runs.empty()) return false;
    for (const auto& r : runs)
        if (!r.contains("error")) return false;
    return true;
}

}  // namespace cadm

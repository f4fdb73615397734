#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cadm/experiment.hpp"
#include "cadm/synthetic.hpp"

namespace {

// "0..9" (inclusive range) or "0,3,17" (explicit list).
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    auto parse_one = [](const std::string& s) -> std::uint64_t {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad seed '" + s + "'");
        return v;
    };
    std::size_t dots = text.find("..");
    if (dots != std::string::npos) {
        std::uint64_t a = parse_one(text.substr(0, dots));
        std::uint64_t b = parse_one(text.substr(dots + 2));
        if (b < a) throw std::invalid_argument("seed range '" + text + "' is descending");
        if (b - a >= 100000) throw std::invalid_argument("seed range '" + text + "' is too large");
        for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
        return seeds;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        seeds.push_back(parse_one(text.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (seeds.empty()) throw std::invalid_argument("no seeds given");
    return seeds;
}

int emit_report(const nlohmann::json& report, const std::string& out_path) {
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << report.dump(2) << '\n';
        if (!out) throw std::runtime_error("failed writing: " + out_path);
    }
    cadm::print_report_table(report, std::cout);
    int failed = 0;
    for (const auto& r : report.at("runs"))
        if (r.contains("error")) ++failed;
    if (failed > 0)
        std::cerr << failed << " of " << report.at("runs").size()
                  << " runs failed; per-run errors are in the report\n";
    return cadm::all_runs_failed(report) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster-customized adaptive distance metric clustering benchmark"};
    app.require_subcommand(1);

    std::string data_path, schema_path, out_path, seeds_text = "0..9", cai_text;
    std::vector<std::string> variant_names;
    int k = 2, max_iter = 100;
    double numeric_weight = 1.0;
    bool header = false;

    CLI::App* run_cmd = app.add_subcommand("run", "Cluster a dataset under one or more metric variants");
    run_cmd->add_option("--data", data_path, "csv data file")->required();
    run_cmd->add_option("--schema", schema_path, "sidecar schema file")->required();
    run_cmd->add_option("--k", k, "number of clusters")->required();
    run_cmd->add_option("--variant", variant_names, "metric variant: hdm|dm1|dm2|cadm (repeatable; default all four)");
    run_cmd->add_option("--cai", cai_text, "override attribute-importance mode: additive|multiplicative|off");
    run_cmd->add_option("--seeds", seeds_text, "seed range a..b or comma list (default 0..9)");
    run_cmd->add_option("--max-iter", max_iter, "iteration cap (default 100)");
    run_cmd->add_option("--numeric-weight", numeric_weight, "weight of the squared numeric term (default 1)");
    run_cmd->add_flag("--header", header, "skip the first csv row");
    run_cmd->add_option("--out", out_path, "write the JSON report here");

    std::string spec_path, synth_out;
    CLI::App* synth_cmd = app.add_subcommand("synth", "Generate a planted synthetic dataset");
    synth_cmd->add_option("--spec", spec_path, "JSON spec file")->required();
    synth_cmd->add_option("--out", synth_out, "output base path (writes <base>.csv and <base>.schema)")->required();

    CLI::App* abl_cmd = app.add_subcommand("ablation", "Run the dm1/dm2/cadm ladder with shared seeds");
    abl_cmd->add_option("--data", data_path, "csv data file")->required();
    abl_cmd->add_option("--schema", schema_path, "sidecar schema file")->required();
    abl_cmd->add_option("--k", k, "number of clusters")->required();
    abl_cmd->add_option("--seeds", seeds_text, "seed range a..b or comma list (default 0..9)");
    abl_cmd->add_option("--max-iter", max_iter, "iteration cap (default 100)");
    abl_cmd->add_flag("--header", header, "skip the first csv row");
    abl_cmd->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*synth_cmd) {
            cadm::SyntheticSpec spec = cadm::synthetic_spec_from_json_file(spec_path);
            cadm::Dataset ds = cadm::generate_synthetic(spec);
            cadm::write_csv(ds, synth_out + ".csv");
            cadm::write_schema(ds, synth_out + ".schema");
            std::cout << "wrote " << synth_out << ".csv and " << synth_out << ".schema (n=" << ds.n()
                      << ", k=" << spec.k << ")\n";
            return 0;
        }

        cadm::ExperimentConfig cfg;
        cfg.data_path = data_path;
        cfg.schema_path = schema_path;
        cfg.header = header;
        cfg.k = k;
        cfg.seeds = parse_seeds(seeds_text);
        cfg.limits.max_iter = max_iter;

        if (*abl_cmd) {
            cadm::Schema schema = cadm::parse_schema_file(schema_path);
            cadm::Dataset ds = cadm::load_dataset_file(data_path, schema, {header});
            nlohmann::json report = cadm::ablation_suite(ds, k, cfg.seeds, cfg.limits);
            report["config"]["data"] = data_path;
            report["config"]["schema"] = schema_path;
            return emit_report(report, out_path);
        }

        if (variant_names.empty()) variant_names = {"hdm", "dm1", "dm2", "cadm"};
        for (const auto& name : variant_names) {
            cadm::VariantSpec v = cadm::variant_preset(name);
            if (!cai_text.empty()) v.config.cai_mode = cadm::cai_mode_from_string(cai_text);
            v.config.numeric_weight = numeric_weight;
            cfg.variants.push_back(std::move(v));
        }
        return emit_report(cadm::run_experiment(cfg), out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

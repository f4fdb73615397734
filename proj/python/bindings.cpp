#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cadm/cluster.hpp"
#include "cadm/dataset.hpp"
#include "cadm/evaluation.hpp"
#include "cadm/experiment.hpp"
#include "cadm/metrics.hpp"
#include "cadm/schema.hpp"
#include "cadm/synthetic.hpp"

namespace py = pybind11;
using namespace cadm;

namespace {

MetricConfig resolve_config(const std::string& variant, const std::optional<std::string>& cai,
                            std::optional<double> numeric_weight) {
    MetricConfig cfg = variant_preset(variant).config;
    if (cai) cfg.cai_mode = cai_mode_from_string(*cai);
    if (numeric_weight) {
        if (*numeric_weight < 0.0) throw std::invalid_argument("numeric_weight must be >= 0");
        cfg.numeric_weight = *numeric_weight;
    }
    return cfg;
}

std::vector<VariantSpec> resolve_variants(const std::vector<std::string>& names) {
    std::vector<VariantSpec> out;
    for (const auto& name : names) out.push_back(variant_preset(name));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cluster-customized adaptive distance metric clustering";

    py::class_<Dataset>(m, "Dataset")
        .def_property_readonly("n", &Dataset::n)
        .def_property_readonly("d_cat", &Dataset::d_cat)
        .def_property_readonly("d_num", &Dataset::d_num)
        .def_property_readonly("has_labels", &Dataset::has_labels)
        .def_property_readonly("labels_true",
                               [](const Dataset& ds) {
                                   auto s = ds.labels_true();
                                   return std::vector<std::int32_t>(s.begin(), s.end());
                               })
        .def_property_readonly("label_names",
                               [](const Dataset& ds) {
                                   auto s = ds.label_names();
                                   return std::vector<std::string>(s.begin(), s.end());
                               })
        .def("__repr__", [](const Dataset& ds) {
            return "<cadm.Dataset n=" + std::to_string(ds.n()) +
                   " d_cat=" + std::to_string(ds.d_cat()) +
                   " d_num=" + std::to_string(ds.d_num()) + ">";
        });

    m.def(
        "load",
        [](const std::string& csv_text, const std::string& schema_text, bool header) {
            LoadOptions opts;
            opts.header = header;
            return load_dataset(csv_text, parse_schema(schema_text), opts);
        },
        py::arg("csv_text"), py::arg("schema_text"), py::arg("header") = false,
        "Parse a dataset from csv and schema text.");

    m.def(
        "load_file",
        [](const std::string& csv_path, const std::string& schema_path, bool header) {
            LoadOptions opts;
            opts.header = header;
            return load_dataset_file(csv_path, parse_schema_file(schema_path), opts);
        },
        py::arg("csv_path"), py::arg("schema_path"), py::arg("header") = false,
        "Load a dataset from a csv file and its schema sidecar.");

    m.def(
        "generate_synthetic",
        [](const std::string& spec_json) {
            return generate_synthetic(synthetic_spec_from_json_text(spec_json));
        },
        py::arg("spec_json"), "Generate a planted-cluster dataset from a JSON spec.");

    m.def(
        "run",
        [](const Dataset& ds, int k, std::uint64_t seed, const std::string& variant,
           const std::optional<std::string>& cai, std::optional<double> numeric_weight,
           int max_iter) {
            RunLimits limits;
            limits.max_iter = max_iter;
            ClusteringResult res =
                run(ds, k, seed, resolve_config(variant, cai, numeric_weight), limits);
            py::dict out;
            out["labels"] = res.labels;
            out["objective_trace"] = res.objective_trace;
            out["iterations"] = res.iterations;
            out["converged_by"] = to_string(res.converged_by);
            out["seconds"] = res.elapsed_seconds;
            return out;
        },
        py::arg("dataset"), py::arg("k"), py::arg("seed") = 0, py::arg("variant") = "cadm",
        py::arg("cai") = std::nullopt, py::arg("numeric_weight") = std::nullopt,
        py::arg("max_iter") = 100, "Cluster a dataset once; returns labels and diagnostics.");

    m.def(
        "clustering_accuracy",
        [](const std::vector<std::int32_t>& pred, const std::vector<std::int32_t>& truth) {
            return clustering_accuracy(pred, truth);
        },
        py::arg("pred"), py::arg("truth"),
        "Accuracy under the best one-to-one cluster-to-class matching.");

    m.def(
        "experiment_json",
        [](const Dataset& ds, int k, const std::vector<std::uint64_t>& seeds,
           const std::vector<std::string>& variants, int max_iter) {
            ExperimentConfig cfg;
            cfg.k = k;
            cfg.seeds = seeds;
            cfg.variants = resolve_variants(variants);
            cfg.limits.max_iter = max_iter;
            return run_experiment(ds, cfg).dump(2);
        },
        py::arg("dataset"), py::arg("k"),
        py::arg("seeds") = std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
        py::arg("variants") = std::vector<std::string>{"hdm", "dm1", "dm2", "cadm"},
        py::arg("max_iter") = 100,
        "Run the variant-by-seed grid and return the report as JSON text.");

    m.def(
        "ablation_json",
        [](const Dataset& ds, int k, const std::vector<std::uint64_t>& seeds, int max_iter) {
            RunLimits limits;
            limits.max_iter = max_iter;
            return ablation_suite(ds, k, seeds, limits).dump(2);
        },
        py::arg("dataset"), py::arg("k"),
        py::arg("seeds") = std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
        py::arg("max_iter") = 100,
        "Run the dm1/dm2/cadm ladder with shared seeds; returns the report as JSON text.");
}

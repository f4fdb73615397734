#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cadm/schema.hpp"

namespace cadm {

// Immutable integer-coded data table. Categorical cells are dense codes into
// the (finalized) schema value sets; numeric columns are min-max normalized
// to [0,1] at construction. Safe for concurrent reads.
class Dataset {
public:
    // Builds a dataset from raw columns. `codes` is n x d_cat row-major,
    // `numerics_raw` is n x d_num row-major (normalized here). The schema must
    // already carry finalized value sets for every categorical attribute.
    static Dataset from_columns(Schema schema, std::vector<std::int32_t> codes,
                                std::vector<double> numerics_raw,
                                std::vector<std::int32_t> labels_true = {},
                                std::vector<std::string> label_names = {});

    int n() const { return n_; }
    int d_cat() const { return d_cat_; }
    int d_num() const { return d_num_; }

    std::int32_t code(int i, int r) const { return codes_[static_cast<std::size_t>(i) * d_cat_ + r]; }
    double numeric(int i, int j) const { return numerics_[static_cast<std::size_t>(i) * d_num_ + j]; }

    std::span<const std::int32_t> row_codes(int i) const {
        return {codes_.data() + static_cast<std::size_t>(i) * d_cat_, static_cast<std::size_t>(d_cat_)};
    }
    std::span<const double> row_numerics(int i) const {
        return {numerics_.data() + static_cast<std::size_t>(i) * d_num_, static_cast<std::size_t>(d_num_)};
    }

    // Number of possible values of categorical attribute r.
    int cardinality(int r) const { return cardinalities_[r]; }
    bool is_ordinal(int r) const { return ordinal_[r] != 0; }

    const Schema& schema() const { return schema_; }
    // Schema spec of categorical attribute r / numeric attribute j.
    const AttributeSpec& cat_attr(int r) const { return schema_.attributes[cat_to_schema_[r]]; }
    const AttributeSpec& num_attr(int j) const { return schema_.attributes[num_to_schema_[j]]; }

    const std::string& decode(int r, std::int32_t code) const { return cat_attr(r).values[code]; }

    bool has_labels() const { return !labels_true_.empty(); }
    std::span<const std::int32_t> labels_true() const { return labels_true_; }
    const std::vector<std::string>& label_names() const { return label_names_; }

    bool rows_equal(int a, int b) const;

private:
    Dataset() = default;

    Schema schema_;
    int n_ = 0, d_cat_ = 0, d_num_ = 0;
    std::vector<int> cat_to_schema_, num_to_schema_;
    std::vector<int> cardinalities_;
    std::vector<std::uint8_t> ordinal_;
    std::vector<std::int32_t> codes_;
    std::vector<double> numerics_;
    std::vector<std::int32_t> labels_true_;
    std::vector<std::string> label_names_;
};

struct LoadOptions {
    bool header = false;  // skip the first row
};

// Parses comma-separated rows against the schema. Ordinal and declared nominal
// value sets are closed (an unseen value is an error); undeclared nominal sets
// are inferred in first-appearance order. Missing (empty) cells are rejected.
Dataset load_dataset(std::string_view csv_text, const Schema& schema, const LoadOptions& opts = {});

Dataset load_dataset_file(const std::string& path, const Schema& schema, const LoadOptions& opts = {});

// Writes the dataset back out as csv + sidecar schema (decoded categorical
// values, normalized numerics, trailing label column when present).
void write_csv(const Dataset& ds, const std::string& path);
void write_schema(const Dataset& ds, const std::string& path);

// Exact occurrence counts of every categorical value over the whole dataset,
// with the per-attribute maximum.
struct GlobalCounts {
    std::vector<std::vector<std::int64_t>> counts;  // [r][value]
    std::vector<std::int64_t> max_count;            // [r]
};

GlobalCounts global_counts(const Dataset& ds);

}  // namespace cadm

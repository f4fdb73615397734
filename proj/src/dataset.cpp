#include "cadm/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cadm {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_row(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(pos)));
            break;
        }
        cells.push_back(trim(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return cells;
}

double parse_numeric(std::string_view cell, int row, const std::string& attr) {
    double out = 0.0;
    auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    if (ec != std::errc{} || end != cell.data() + cell.size() || !std::isfinite(out))
        throw std::invalid_argument("row " + std::to_string(row) + ": '" + std::string(cell) +
                                    "' is not a finite number (attribute '" + attr + "')");
    return out;
}

}  // namespace

Dataset Dataset::from_columns(Schema schema, std::vector<std::int32_t> codes,
                              std::vector<double> numerics_raw,
                              std::vector<std::int32_t> labels_true,
                              std::vector<std::string> label_names) {
    schema.validate();

    Dataset ds;
    ds.schema_ = std::move(schema);
    for (std::size_t c = 0; c < ds.schema_.attributes.size(); ++c) {
        const auto& a = ds.schema_.attributes[c];
        if (a.is_categorical()) {
            if (a.values.empty())
                throw std::invalid_argument("attribute '" + a.name + "' has no finalized value set");
            ds.cat_to_schema_.push_back(static_cast<int>(c));
            ds.cardinalities_.push_back(a.cardinality());
            ds.ordinal_.push_back(a.kind == AttrKind::ordinal ? 1 : 0);
        } else {
            ds.num_to_schema_.push_back(static_cast<int>(c));
        }
    }
    ds.d_cat_ = static_cast<int>(ds.cat_to_schema_.size());
    ds.d_num_ = static_cast<int>(ds.num_to_schema_.size());

    if (ds.d_cat_ == 0) throw std::invalid_argument("dataset has no categorical attribute");
    if (codes.size() % ds.d_cat_ != 0)
        throw std::invalid_argument("categorical cell count is not a multiple of d_cat");
    ds.n_ = static_cast<int>(codes.size() / ds.d_cat_);
    if (ds.n_ == 0) throw std::invalid_argument("dataset is empty");
    if (numerics_raw.size() != static_cast<std::size_t>(ds.n_) * ds.d_num_)
        throw std::invalid_argument("numeric cell count does not match n x d_num");
    if (!labels_true.empty() && labels_true.size() != static_cast<std::size_t>(ds.n_))
        throw std::invalid_argument("label count does not match n");

    for (int i = 0; i < ds.n_; ++i)
        for (int r = 0; r < ds.d_cat_; ++r) {
            std::int32_t v = codes[static_cast<std::size_t>(i) * ds.d_cat_ + r];
            if (v < 0 || v >= ds.cardinalities_[r])
                throw std::invalid_argument("row " + std::to_string(i) +
                                            ": categorical code out of range");
        }

    // Min-max normalize each numeric column; a constant column maps to 0.
    for (int j = 0; j < ds.d_num_; ++j) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < ds.n_; ++i) {
            double v = numerics_raw[static_cast<std::size_t>(i) * ds.d_num_ + j];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        double span = hi - lo;
        for (int i = 0; i < ds.n_; ++i) {
            double& v = numerics_raw[static_cast<std::size_t>(i) * ds.d_num_ + j];
            v = span > 0.0 ? (v - lo) / span : 0.0;
        }
    }

    ds.codes_ = std::move(codes);
    ds.numerics_ = std::move(numerics_raw);
    ds.labels_true_ = std::move(labels_true);
    ds.label_names_ = std::move(label_names);
    return ds;
}

bool Dataset::rows_equal(int a, int b) const {
    for (int r = 0; r < d_cat_; ++r)
        if (code(a, r) != code(b, r)) return false;
    for (int j = 0; j < d_num_; ++j)
        if (numeric(a, j) != numeric(b, j)) return false;
    return true;
}

Dataset load_dataset(std::string_view csv_text, const Schema& schema, const LoadOptions& opts) {
    schema.validate();
    Schema working = schema;
    const int columns = working.file_columns();

    // Column index -> attribute index (-1 for the label column).
    std::vector<int> col_attr(columns, -1);
    {
        int a = 0;
        for (int c = 0; c < columns; ++c) {
            if (working.label_column && *working.label_column == c) continue;
            col_attr[c] = a++;
        }
        if (a != static_cast<int>(working.attributes.size()))
            throw std::invalid_argument("schema: label column index out of range");
    }

    std::vector<bool> closed(working.attributes.size());
    for (std::size_t a = 0; a < working.attributes.size(); ++a)
        closed[a] = working.attributes[a].kind != AttrKind::nominal || !working.attributes[a].values.empty();

    std::vector<std::vector<std::string_view>> rows;
    std::size_t pos = 0;
    bool first = true;
    while (pos <= csv_text.size()) {
        std::size_t eol = csv_text.find('\n', pos);
        bool last = eol == std::string_view::npos;
        if (last) eol = csv_text.size();
        std::string_view line = csv_text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = eol + 1;
        bool skip = first && opts.header;
        first = false;
        if (!skip && !trim(line).empty()) rows.push_back(split_row(line));
        if (last) break;
    }
    if (rows.empty()) throw std::invalid_argument("dataset is empty");

    // First pass: finalize inferred nominal value sets in first-appearance order.
    std::vector<std::unordered_map<std::string, int>> code_maps(working.attributes.size());
    for (std::size_t a = 0; a < working.attributes.size(); ++a)
        for (std::size_t v = 0; v < working.attributes[a].values.size(); ++v)
            code_maps[a].emplace(working.attributes[a].values[v], static_cast<int>(v));

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != columns)
            throw std::invalid_argument("row " + std::to_string(i) + ": expected " +
                                        std::to_string(columns) + " cells, got " +
                                        std::to_string(rows[i].size()));
        for (int c = 0; c < columns; ++c) {
            if (rows[i][c].empty())
                throw std::invalid_argument("row " + std::to_string(i) + ": missing value in column " +
                                            std::to_string(c));
            int a = col_attr[c];
            if (a < 0) continue;
            auto& attr = working.attributes[a];
            if (attr.kind == AttrKind::nominal && !closed[a] &&
                !code_maps[a].count(std::string(rows[i][c]))) {
                code_maps[a].emplace(std::string(rows[i][c]), attr.cardinality());
                attr.values.emplace_back(rows[i][c]);
            }
        }
    }

    int d_cat = 0, d_num = 0;
    for (const auto& a : working.attributes) (a.is_categorical() ? d_cat : d_num)++;

    std::vector<std::int32_t> codes(rows.size() * d_cat);
    std::vector<double> numerics(rows.size() * d_num);
    std::vector<std::int32_t> labels;
    std::vector<std::string> label_names;
    std::unordered_map<std::string, std::int32_t> label_codes;
    if (working.label_column) labels.resize(rows.size());

    for (std::size_t i = 0; i < rows.size(); ++i) {
        int r = 0, j = 0;
        for (int c = 0; c < columns; ++c) {
            std::string_view cell = rows[i][c];
            int a = col_attr[c];
            if (a < 0) {
                auto [it, fresh] = label_codes.emplace(std::string(cell),
                                                       static_cast<std::int32_t>(label_names.size()));
                if (fresh) label_names.emplace_back(cell);
                labels[i] = it->second;
                continue;
            }
            const auto& attr = working.attributes[a];
            if (attr.kind == AttrKind::numeric) {
                numerics[i * d_num + j++] = parse_numeric(cell, static_cast<int>(i), attr.name);
            } else {
                auto it = code_maps[a].find(std::string(cell));
                if (it == code_maps[a].end())
                    throw std::invalid_argument("row " + std::to_string(i) + ": value '" +
                                                std::string(cell) + "' is not in the declared set of '" +
                                                attr.name + "'");
                codes[i * d_cat + r++] = it->second;
            }
        }
    }

    return Dataset::from_columns(std::move(working), std::move(codes), std::move(numerics),
                                 std::move(labels), std::move(label_names));
}

Dataset load_dataset_file(const std::string& path, const Schema& schema, const LoadOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_dataset(buf.str(), schema, opts);
}

void write_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.precision(17);
    for (int i = 0; i < ds.n(); ++i) {
        bool sep = false;
        int r = 0, j = 0;
        for (const auto& a : ds.schema().attributes) {
            if (sep) out << ',';
            sep = true;
            if (a.is_categorical())
                out << ds.decode(r, ds.code(i, r)), ++r;
            else
                out << ds.numeric(i, j), ++j;
        }
        if (ds.has_labels()) out << ',' << ds.label_names()[ds.labels_true()[i]];
        out << '\n';
    }
    if (!out) throw std::runtime_error("failed writing: " + path);
}

void write_schema(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    for (const auto& a : ds.schema().attributes) {
        out << a.name << ": " << to_string(a.kind);
        if (!a.values.empty()) {
            out << '[';
            for (std::size_t v = 0; v < a.values.size(); ++v)
                out << (v ? "," : "") << a.values[v];
            out << ']';
        }
        out << '\n';
    }
    if (ds.has_labels())
        out << (ds.schema().label_name.empty() ? "class" : ds.schema().label_name) << ": label\n";
    if (!out) throw std::runtime_error("failed writing: " + path);
}

GlobalCounts global_counts(const Dataset& ds) {
    GlobalCounts g;
    g.counts.resize(ds.d_cat());
    g.max_count.assign(ds.d_cat(), 0);
    for (int r = 0; r < ds.d_cat(); ++r) g.counts[r].assign(ds.cardinality(r), 0);
    for (int i = 0; i < ds.n(); ++i)
        for (int r = 0; r < ds.d_cat(); ++r) ++g.counts[r][ds.code(i, r)];
    for (int r = 0; r < ds.d_cat(); ++r)
        g.max_count[r] = *std::max_element(g.counts[r].begin(), g.counts[r].end());
    return g;
}

}  // namespace cadm

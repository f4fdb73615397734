#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cadm {

enum class AttrKind { nominal, ordinal, numeric };

std::string_view to_string(AttrKind kind);

// One column of the data file. Categorical attributes carry their value set:
// ordinal values are listed in ascending semantic order and form a closed set;
// nominal values may be declared (closed) or left empty and inferred from the
// data in first-appearance order.
struct AttributeSpec {
    std::string name;
    AttrKind kind = AttrKind::nominal;
    std::vector<std::string> values;

    bool is_categorical() const { return kind != AttrKind::numeric; }
    int cardinality() const { return static_cast<int>(values.size()); }

    // Index of `value` in the value set, or -1 if absent.
    int code_of(std::string_view value) const;
};

// Column layout of a dataset: attributes in file order plus an optional
// class-label column (excluded from the attribute list; labels never take
// part in clustering).
struct Schema {
    std::vector<AttributeSpec> attributes;
    std::optional<int> label_column;  // file column index
    std::string label_name;

    int file_columns() const {
        return static_cast<int>(attributes.size()) + (label_column ? 1 : 0);
    }

    // Throws std::invalid_argument on duplicate names, an ordinal attribute
    // without a declared value list, or a schema with no categorical attribute.
    void validate() const;
};

// Parses the sidecar schema document. One attribute per line, in column order:
//
//   <name>: nominal
//   <name>: nominal[v0, v1, ...]
//   <name>: ordinal[v0, v1, ...]
//   <name>: numeric
//   <name>: label
//
// Blank lines and lines starting with '#' are ignored.
Schema parse_schema(std::string_view text);

Schema parse_schema_file(const std::string& path);

}  // namespace cadm

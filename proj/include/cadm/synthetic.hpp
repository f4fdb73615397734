#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cadm/dataset.hpp"

namespace cadm {

struct SyntheticAttribute {
    AttrKind kind = AttrKind::nominal;
    int cardinality = 0;  // >= 2 for categorical, ignored for numeric
};

// Recipe for a dataset with k planted groups. Within group g each categorical
// attribute draws a group-specific peak value with probability skew and falls
// back to a uniform draw otherwise; numeric attributes draw from a normal
// whose center separates the groups as skew grows. skew 0 makes every group
// identically distributed, skew 1 makes every group constant.
struct SyntheticSpec {
    int n = 0;
    int k = 1;
    double skew = 1.0;  // in [0, 1]
    std::uint64_t seed = 0;
    std::vector<SyntheticAttribute> attributes;
};

// Generates the planted dataset; labels_true carries the group ids.
// Throws on an invalid spec (cardinality < 2, skew outside [0,1], n < 1,
// or more groups than distinguishable peak combinations).
Dataset generate_synthetic(const SyntheticSpec& spec);

// Reads a spec from its JSON document form:
//   {"n": 200, "k": 3, "skew": 0.9, "seed": 7,
//    "attributes": [{"kind": "ordinal", "cardinality": 4}, ...]}
// An attribute entry may carry "count" to stand for that many copies.
SyntheticSpec synthetic_spec_from_json_text(const std::string& text);
SyntheticSpec synthetic_spec_from_json_file(const std::string& path);

}  // namespace cadm

#include "cadm/synthetic.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cadm {

namespace {

void validate_spec(const SyntheticSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("synthetic: n must be >= 1");
    if (spec.k < 1 || spec.k > spec.n) throw std::invalid_argument("synthetic: k must be in [1, n]");
    if (!(spec.skew >= 0.0 && spec.skew <= 1.0))
        throw std::invalid_argument("synthetic: skew must be in [0, 1]");
    bool any_cat = false;
    long long combos = 1;
    for (const auto& a : spec.attributes) {
        if (a.kind == AttrKind::numeric) continue;
        any_cat = true;
        if (a.cardinality < 2)
            throw std::invalid_argument("synthetic: categorical cardinality must be >= 2");
        if (combos < spec.k) combos *= a.cardinality;
    }
    if (!any_cat) throw std::invalid_argument("synthetic: at least one categorical attribute");
    if (combos < spec.k)
        throw std::invalid_argument("synthetic: k exceeds the number of distinct peak combinations");
}

}  // namespace

Dataset generate_synthetic(const SyntheticSpec& spec) {
    validate_spec(spec);

    Schema schema;
    int cat_idx = 0, num_idx = 0;
    for (const auto& a : spec.attributes) {
        AttributeSpec s;
        s.kind = a.kind;
        if (a.kind == AttrKind::numeric) {
            s.name = "x" + std::to_string(num_idx++);
        } else {
            s.name = "a" + std::to_string(cat_idx++);
            for (int v = 0; v < a.cardinality; ++v) s.values.push_back("v" + std::to_string(v));
        }
        schema.attributes.push_back(std::move(s));
    }
    schema.label_column = static_cast<int>(schema.attributes.size());
    schema.label_name = "group";

    const int d_cat = cat_idx, d_num = num_idx;

    // Peak tuple of group g: the mixed-radix digits of g over the categorical
    // cardinalities, so distinct groups always get distinct peak tuples.
    std::vector<std::vector<std::int32_t>> peaks(spec.k, std::vector<std::int32_t>(d_cat));
    for (int g = 0; g < spec.k; ++g) {
        long long rem = g;
        int r = 0;
        for (const auto& a : spec.attributes) {
            if (a.kind == AttrKind::numeric) continue;
            peaks[g][r++] = static_cast<std::int32_t>(rem % a.cardinality);
            rem /= a.cardinality;
        }
    }

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<std::int32_t> codes(static_cast<std::size_t>(spec.n) * d_cat);
    std::vector<double> numerics(static_cast<std::size_t>(spec.n) * d_num);
    std::vector<std::int32_t> labels(spec.n);
    std::vector<std::string> label_names;
    for (int g = 0; g < spec.k; ++g) label_names.push_back("g" + std::to_string(g));

    const double sigma = (1.0 - spec.skew) / 2.0;
    for (int i = 0; i < spec.n; ++i) {
        int g = i % spec.k;
        labels[i] = g;
        double mu = 0.5 + spec.skew * ((g + 0.5) / spec.k - 0.5);
        int r = 0, j = 0;
        for (const auto& a : spec.attributes) {
            if (a.kind == AttrKind::numeric) {
                double v = mu;
                if (sigma > 0.0) v = std::normal_distribution<double>(mu, sigma)(rng);
                numerics[static_cast<std::size_t>(i) * d_num + j++] = v;
            } else {
                std::int32_t v = peaks[g][r];
                if (coin(rng) >= spec.skew)
                    v = std::uniform_int_distribution<std::int32_t>(0, a.cardinality - 1)(rng);
                codes[static_cast<std::size_t>(i) * d_cat + r++] = v;
            }
        }
    }

    return Dataset::from_columns(std::move(schema), std::move(codes), std::move(numerics),
                                 std::move(labels), std::move(label_names));
}

SyntheticSpec synthetic_spec_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("synthetic spec: ") + e.what());
    }
    SyntheticSpec spec;
    try {
        spec.n = j.at("n").get<int>();
        spec.k = j.value("k", 1);
        spec.skew = j.value("skew", 1.0);
        spec.seed = j.value("seed", std::uint64_t{0});
        for (const auto& a : j.at("attributes")) {
            SyntheticAttribute attr;
            std::string kind = a.at("kind").get<std::string>();
            if (kind == "nominal") attr.kind = AttrKind::nominal;
            else if (kind == "ordinal") attr.kind = AttrKind::ordinal;
            else if (kind == "numeric") attr.kind = AttrKind::numeric;
            else throw std::invalid_argument("synthetic spec: unknown kind '" + kind + "'");
            attr.cardinality = a.value("cardinality", 0);
            int count = a.value("count", 1);
            if (count < 1) throw std::invalid_argument("synthetic spec: count must be >= 1");
            for (int c = 0; c < count; ++c) spec.attributes.push_back(attr);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("synthetic spec: ") + e.what());
    }
    validate_spec(spec);
    return spec;
}

SyntheticSpec synthetic_spec_from_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return synthetic_spec_from_json_text(buf.str());
}

}  // namespace cadm

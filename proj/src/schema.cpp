#include "cadm/schema.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace cadm {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_values(std::string_view list, const std::string& attr) {
    std::vector<std::string> values;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        if (comma == std::string_view::npos) comma = list.size();
        std::string_view item = trim(list.substr(pos, comma - pos));
        if (item.empty())
            throw std::invalid_argument("schema: empty value in list of attribute '" + attr + "'");
        values.emplace_back(item);
        pos = comma + 1;
        if (comma == list.size()) break;
    }
    return values;
}

}  // namespace

std::string_view to_string(AttrKind kind) {
    switch (kind) {
        case AttrKind::nominal: return "nominal";
        case AttrKind::ordinal: return "ordinal";
        case AttrKind::numeric: return "numeric";
    }
    return "?";
}

int AttributeSpec::code_of(std::string_view value) const {
    auto it = std::find(values.begin(), values.end(), value);
    return it == values.end() ? -1 : static_cast<int>(it - values.begin());
}

void Schema::validate() const {
    std::unordered_set<std::string_view> seen;
    bool any_categorical = false;
    for (const auto& a : attributes) {
        if (a.name.empty()) throw std::invalid_argument("schema: attribute with empty name");
        if (!seen.insert(a.name).second)
            throw std::invalid_argument("schema: duplicate attribute name '" + a.name + "'");
        if (a.kind == AttrKind::ordinal && a.values.empty())
            throw std::invalid_argument("schema: ordinal attribute '" + a.name +
                                        "' must declare its value order");
        if (a.kind == AttrKind::numeric && !a.values.empty())
            throw std::invalid_argument("schema: numeric attribute '" + a.name +
                                        "' cannot declare values");
        any_categorical = any_categorical || a.is_categorical();
        std::unordered_set<std::string_view> vals;
        for (const auto& v : a.values)
            if (!vals.insert(v).second)
                throw std::invalid_argument("schema: duplicate value '" + v + "' in attribute '" +
                                            a.name + "'");
    }
    if (label_column && !label_name.empty() && seen.count(label_name))
        throw std::invalid_argument("schema: duplicate attribute name '" + label_name + "'");
    if (!any_categorical)
        throw std::invalid_argument("schema: at least one categorical attribute is required");
}

Schema parse_schema(std::string_view text) {
    Schema schema;
    int column = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = trim(text.substr(pos, eol - pos));
        bool last = eol == text.size();
        pos = eol + 1;
        if (line.empty() || line.front() == '#') {
            if (last) break;
            continue;
        }

        std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("schema: missing ':' in line '" + std::string(line) + "'");
        std::string name{trim(line.substr(0, colon))};
        std::string_view kind_text = trim(line.substr(colon + 1));

        std::vector<std::string> values;
        std::string_view kind_word = kind_text;
        std::size_t bracket = kind_text.find('[');
        if (bracket != std::string_view::npos) {
            if (kind_text.back() != ']')
                throw std::invalid_argument("schema: unterminated value list for attribute '" + name + "'");
            kind_word = trim(kind_text.substr(0, bracket));
            values = split_values(kind_text.substr(bracket + 1, kind_text.size() - bracket - 2), name);
        }

        if (kind_word == "label") {
            if (!values.empty())
                throw std::invalid_argument("schema: label column '" + name + "' cannot declare values");
            if (schema.label_column)
                throw std::invalid_argument("schema: more than one label column");
            schema.label_column = column;
            schema.label_name = name;
        } else {
            AttributeSpec spec;
            spec.name = std::move(name);
            spec.values = std::move(values);
            if (kind_word == "nominal") {
                spec.kind = AttrKind::nominal;
            } else if (kind_word == "ordinal") {
                spec.kind = AttrKind::ordinal;
            } else if (kind_word == "numeric") {
                spec.kind = AttrKind::numeric;
            } else {
                throw std::invalid_argument("schema: unknown kind '" + std::string(kind_word) +
                                            "' for attribute '" + spec.name + "'");
            }
            schema.attributes.push_back(std::move(spec));
        }
        ++column;
        if (last) break;
    }
    schema.validate();
    return schema;
}

Schema parse_schema_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schema file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_schema(buf.str());
}

}  // namespace cadm

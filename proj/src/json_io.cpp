#include "affchar/json_io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace affchar {

const JsonValue* JsonValue::find(const std::string& key) const {
    const auto& obj = std::get<Object>(value_);
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &it->second;
}

namespace {

void write_string(std::ostream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\r': os << "\\r"; break;
            case '\t': os << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

void write_value(std::ostream& os, const JsonValue& v) {
    if (v.is_object()) {
        os << '{';
        bool first = true;
        for (const auto& [k, val] : v.as_object()) {
            if (!first) os << ',';
            first = false;
            write_string(os, k);
            os << ':';
            write_value(os, val);
        }
        os << '}';
    } else if (v.is_array()) {
        os << '[';
        bool first = true;
        for (const auto& val : v.as_array()) {
            if (!first) os << ',';
            first = false;
            write_value(os, val);
        }
        os << ']';
    } else if (v.is_string()) {
        write_string(os, v.as_string());
    } else if (v.is_integer()) {
        os << v.as_integer().get_str();
    } else {
        os << (v.as_bool() ? "true" : "false");
    }
}

std::optional<JsonValue> convert(const nlohmann::json& j) {
    using nlohmann::json;
    switch (j.type()) {
        case json::value_t::object: {
            JsonValue out = JsonValue::object();
            for (auto it = j.begin(); it != j.end(); ++it) {
                auto v = convert(it.value());
                if (!v) return std::nullopt;
                out[it.key()] = std::move(*v);
            }
            return out;
        }
        case json::value_t::array: {
            JsonValue out = JsonValue::array();
            for (const auto& e : j) {
                auto v = convert(e);
                if (!v) return std::nullopt;
                out.push_back(std::move(*v));
            }
            return out;
        }
        case json::value_t::string:
            return JsonValue(j.get<std::string>());
        case json::value_t::boolean:
            return JsonValue(j.get<bool>());
        case json::value_t::number_integer:
            return JsonValue(Int(static_cast<long>(j.get<std::int64_t>())));
        case json::value_t::number_unsigned: {
            const auto u = j.get<std::uint64_t>();
            if (u > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
            return JsonValue(Int(static_cast<long>(u)));
        }
        default:
            return std::nullopt;  // floats, nulls, binaries: not ours
    }
}

}  // namespace

std::string JsonValue::serialize() const {
    std::ostringstream os;
    write_value(os, *this);
    return os.str();
}

std::optional<JsonValue> parse_json(const std::string& text) {
    const auto parsed = nlohmann::json::parse(text, nullptr, false);
    if (parsed.is_discarded()) return std::nullopt;
    return convert(parsed);
}

JsonValue weight_json(const DynkinLabel& w) {
    JsonValue arr = JsonValue::array();
    for (int e : w.entries()) arr.push_back(JsonValue(e));
    return arr;
}

JsonValue polynomial_json(const QLaurent& p) {
    JsonValue arr = JsonValue::array();
    for (const auto& [e, c] : p.terms()) {  // ascending exponent
        JsonValue term = JsonValue::object();
        term["coefficient"] = JsonValue(c);
        term["exponent"] = JsonValue(e);
        arr.push_back(std::move(term));
    }
    return arr;
}

JsonValue character_document(int rank, int level, const DynkinLabel& weight, int max_degree,
                             const std::string& method, const CharSeries& series) {
    JsonValue doc = JsonValue::object();
    doc["command"] = "character";
    doc["schema_version"] = kSchemaVersion;
    doc["rank"] = rank;
    doc["level"] = level;
    doc["weight"] = weight_json(weight);
    doc["max_degree"] = max_degree;
    doc["method"] = method;
    JsonValue entries = JsonValue::array();
    for (const auto& [d, ws] : series.data()) {
        if (d > max_degree) break;
        for (const auto& [w, m] : ws) {  // weights ascend lexicographically
            JsonValue e = JsonValue::object();
            e["degree"] = d;
            e["weight"] = weight_json(w);
            e["multiplicity"] = m;
            entries.push_back(std::move(e));
        }
    }
    doc["entries"] = std::move(entries);
    return doc;
}

JsonValue kostka_document(int rank, const DynkinLabel& l, const DynkinLabel& n,
                          const QLaurent& poly) {
    JsonValue doc = JsonValue::object();
    doc["command"] = "kostka";
    doc["schema_version"] = kSchemaVersion;
    doc["rank"] = rank;
    doc["l"] = weight_json(l);
    doc["n"] = weight_json(n);
    doc["polynomial"] = polynomial_json(poly);
    return doc;
}

JsonValue kostka_matrix_document(int rank, int max_threshold, int congruence, bool inverted,
                                 const KostkaMatrix& m) {
    JsonValue doc = JsonValue::object();
    doc["command"] = "kostka-matrix";
    doc["schema_version"] = kSchemaVersion;
    doc["rank"] = rank;
    doc["max_threshold"] = max_threshold;
    doc["residue_class"] = congruence;
    doc["invert"] = inverted;
    JsonValue basis = JsonValue::array();
    for (const auto& w : m.basis) basis.push_back(weight_json(w));
    doc["basis"] = std::move(basis);
    JsonValue entries = JsonValue::array();
    for (int row = 0; row < m.size(); ++row)
        for (int col = 0; col < m.size(); ++col) {
            const auto& p = m.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (p.is_zero()) continue;
            JsonValue e = JsonValue::object();
            e["row"] = row;
            e["col"] = col;
            e["polynomial"] = polynomial_json(p);
            entries.push_back(std::move(e));
        }
    doc["entries"] = std::move(entries);
    return doc;
}

JsonValue decompose_document(int rank, int level, const Decomposition& d) {
    JsonValue doc = JsonValue::object();
    doc["command"] = "decompose";
    doc["schema_version"] = kSchemaVersion;
    doc["rank"] = rank;
    doc["level"] = level;
    doc["n"] = weight_json(d.source);
    JsonValue terms = JsonValue::array();
    for (const auto& [w, coeff] : d.terms) {
        JsonValue t = JsonValue::object();
        t["weight"] = weight_json(w);
        t["coefficient"] = polynomial_json(coeff);
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

JsonValue truncate_character_document(const JsonValue& document, int max_degree) {
    JsonValue out = document;
    out["max_degree"] = max_degree;
    JsonValue kept = JsonValue::array();
    const JsonValue* entries = document.find("entries");
    AFFCHAR_CHECK(entries && entries->is_array(), "malformed character document");
    for (const auto& e : entries->as_array()) {
        const JsonValue* deg = e.find("degree");
        AFFCHAR_CHECK(deg && deg->is_integer(), "malformed character entry");
        if (deg->as_integer() <= max_degree) kept.push_back(e);
    }
    out["entries"] = std::move(kept);
    return out;
}

}  // namespace affchar

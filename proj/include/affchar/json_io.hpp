#ifndef AFFCHAR_JSON_IO_HPP
#define AFFCHAR_JSON_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "affchar/char_engine.hpp"
#include "affchar/charseries.hpp"
#include "affchar/kostka.hpp"

namespace affchar {

inline constexpr int kSchemaVersion = 1;

/// Canonical JSON value: objects keep sorted keys, serialization has no
/// whitespace, and integers are emitted at full precision. Byte-stable
/// output is a contract (cache keys and documents hash and diff on it).
class JsonValue {
public:
    using Object = std::map<std::string, JsonValue>;
    using Array = std::vector<JsonValue>;

    JsonValue() : value_(Object{}) {}
    static JsonValue object() { return JsonValue(); }
    static JsonValue array() {
        JsonValue v;
        v.value_ = Array{};
        return v;
    }
    JsonValue(const char* s) : value_(std::string(s)) {}
    JsonValue(std::string s) : value_(std::move(s)) {}
    JsonValue(Int i) : value_(std::move(i)) {}
    JsonValue(int i) : value_(Int(i)) {}
    JsonValue(bool b) : value_(b) {}

    JsonValue& operator[](const std::string& key) { return std::get<Object>(value_)[key]; }
    void push_back(JsonValue v) { std::get<Array>(value_).push_back(std::move(v)); }

    bool is_object() const { return std::holds_alternative<Object>(value_); }
    bool is_array() const { return std::holds_alternative<Array>(value_); }
    bool is_string() const { return std::holds_alternative<std::string>(value_); }
    bool is_integer() const { return std::holds_alternative<Int>(value_); }
    bool is_bool() const { return std::holds_alternative<bool>(value_); }

    const Object& as_object() const { return std::get<Object>(value_); }
    const Array& as_array() const { return std::get<Array>(value_); }
    const std::string& as_string() const { return std::get<std::string>(value_); }
    const Int& as_integer() const { return std::get<Int>(value_); }
    bool as_bool() const { return std::get<bool>(value_); }

    const JsonValue* find(const std::string& key) const;

    std::string serialize() const;
    bool operator==(const JsonValue&) const = default;

private:
    std::variant<Object, Array, std::string, Int, bool> value_;
};

/// Strict parse into the canonical value type; integers must be exact.
/// Returns nullopt for malformed text or non-integer numbers.
std::optional<JsonValue> parse_json(const std::string& text);

JsonValue weight_json(const DynkinLabel& w);
JsonValue polynomial_json(const QLaurent& p);

JsonValue character_document(int rank, int level, const DynkinLabel& weight, int max_degree,
                             const std::string& method, const CharSeries& series);
JsonValue kostka_document(int rank, const DynkinLabel& l, const DynkinLabel& n,
                          const QLaurent& poly);
JsonValue kostka_matrix_document(int rank, int max_threshold, int congruence, bool inverted,
                                 const KostkaMatrix& m);
JsonValue decompose_document(int rank, int level, const Decomposition& d);

/// Rebuild a character document truncated to a smaller degree; entries of a
/// complete table restrict exactly, never by recomputation.
JsonValue truncate_character_document(const JsonValue& document, int max_degree);

}  // namespace affchar

#endif

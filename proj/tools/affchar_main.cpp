#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "affchar/cache.hpp"
#include "affchar/char_engine.hpp"
#include "affchar/json_io.hpp"
#include "affchar/oracles.hpp"
#include "affchar/verify.hpp"

namespace {

using namespace affchar;

DynkinLabel parse_weight(const std::string& text, int rank) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            entries.push_back(v);
        } catch (const std::exception&) {
            throw usage_error("weight entries must be comma-separated integers: '" + text + "'");
        }
    }
    if (static_cast<int>(entries.size()) != rank)
        throw usage_error("weight must have exactly " + std::to_string(rank) + " entries");
    return DynkinLabel(std::move(entries));
}

void emit(const JsonValue& doc, const std::string& output) {
    const std::string text = doc.serialize() + "\n";
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::trunc);
    if (!out) throw usage_error("cannot open output file: " + output);
    out << text;
    if (!out) throw usage_error("failed writing output file: " + output);
}

int cmd_character(int rank, int level, const std::string& weight_text, int max_degree,
                  const std::string& method, const std::string& output) {
    if (rank < 1) throw usage_error("rank must be >= 1");
    if (level < 1) throw usage_error("level must be >= 1");
    if (max_degree < 0) throw usage_error("max-degree must be >= 0");
    const DynkinLabel weight = parse_weight(weight_text, rank);
    if (!weight.dominant()) throw usage_error("weight must be dominant");
    if (threshold_level(weight) > level)
        throw usage_error("weight is not integrable at this level");
    if (method != "fermionic" && method != "freudenthal")
        throw usage_error("method must be 'fermionic' or 'freudenthal'");

    JsonValue key_core = JsonValue::object();
    key_core["command"] = "character";
    key_core["schema_version"] = kSchemaVersion;
    key_core["rank"] = rank;
    key_core["level"] = level;
    key_core["weight"] = weight_json(weight);
    key_core["method"] = method;
    JsonValue key = key_core;
    key["max_degree"] = max_degree;

    const CacheStore cache = CacheStore::from_env();
    if (auto doc = cache.load_exact(key)) {
        emit(*doc, output);
        return 0;
    }
    if (auto deeper = cache.load_deeper(key_core, max_degree)) {
        emit(truncate_character_document(*deeper, max_degree), output);
        return 0;
    }

    const CharSeries series = method == "fermionic"
                                  ? ch_H(weight, level, max_degree)
                                  : freudenthal_affine(weight, level, max_degree).to_char_series();
    const JsonValue doc = character_document(rank, level, weight, max_degree, method, series);
    cache.store(key, doc);
    emit(doc, output);
    return 0;
}

int cmd_kostka(int rank, const std::string& l_text, const std::string& n_text,
               const std::string& output) {
    if (rank < 1) throw usage_error("rank must be >= 1");
    const DynkinLabel l = parse_weight(l_text, rank);
    const DynkinLabel n = parse_weight(n_text, rank);
    emit(kostka_document(rank, l, n, kostka_poly(l, n, rank)), output);
    return 0;
}

int cmd_kostka_matrix(int rank, int max_threshold, int congruence, bool inverted,
                      const std::string& output) {
    if (rank < 1) throw usage_error("rank must be >= 1");
    if (max_threshold < 0) throw usage_error("max-threshold must be >= 0");
    if (congruence < 0 || congruence > rank)
        throw usage_error("class must lie in 0.." + std::to_string(rank));

    JsonValue key = JsonValue::object();
    key["command"] = "kostka-matrix";
    key["schema_version"] = kSchemaVersion;
    key["rank"] = rank;
    key["max_threshold"] = max_threshold;
    key["residue_class"] = congruence;
    key["invert"] = inverted;

    const CacheStore cache = CacheStore::from_env();
    if (auto doc = cache.load_exact(key)) {
        emit(*doc, output);
        return 0;
    }
    KostkaMatrix m = kostka_matrix(rank, max_threshold, congruence);
    if (inverted) m = invert(m);
    const JsonValue doc = kostka_matrix_document(rank, max_threshold, congruence, inverted, m);
    cache.store(key, doc);
    emit(doc, output);
    return 0;
}

int cmd_decompose(int rank, const std::string& n_text, int level, const std::string& output) {
    if (rank < 1) throw usage_error("rank must be >= 1");
    const DynkinLabel n = parse_weight(n_text, rank);
    if (!n.dominant()) throw usage_error("weight must be dominant");
    if (level == 0) level = threshold_level(n);
    if (threshold_level(n) > level)
        throw usage_error("fusion weight exceeds the requested level");
    emit(decompose_document(rank, level, decompose_fusion(n, rank)), output);
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& output) {
    const auto results = run_verify_suite(suite);
    JsonValue doc = JsonValue::object();
    doc["command"] = "verify";
    doc["schema_version"] = kSchemaVersion;
    doc["suite"] = suite;
    doc["pass"] = all_passed(results);
    JsonValue checks = JsonValue::array();
    for (const auto& r : results) {
        JsonValue c = JsonValue::object();
        c["name"] = r.name;
        c["pass"] = r.pass;
        if (!r.detail.empty()) c["detail"] = r.detail;
        checks.push_back(std::move(c));
    }
    doc["checks"] = std::move(checks);
    emit(doc, output);
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact fermionic characters, Kostka polynomials, and fusion-product\n"
                 "decompositions for affine su(r+1) at integer level."};
    app.require_subcommand(1);

    int rank = 0, level = 0, max_degree = 0, max_threshold = 0, congruence = 0;
    std::string weight, l_text, n_text, method = "fermionic", output, suite;
    bool inverted = false;

    auto* character = app.add_subcommand("character", "Graded character of an irreducible module");
    character->add_option("--rank", rank, "rank r of su(r+1)")->required();
    character->add_option("--level", level, "level k")->required();
    character->add_option("--weight", weight, "comma-separated Dynkin labels")->required();
    character->add_option("--max-degree", max_degree, "truncation degree")->required();
    character->add_option("--method", method, "fermionic | freudenthal");
    character->add_option("--output", output, "write the document to a file");

    auto* kostka = app.add_subcommand("kostka", "One generalized Kostka polynomial");
    kostka->add_option("--rank", rank)->required();
    kostka->add_option("--l", l_text, "row label")->required();
    kostka->add_option("--n", n_text, "column label")->required();
    kostka->add_option("--output", output);

    auto* matrix = app.add_subcommand("kostka-matrix", "Kostka matrix over a threshold basis");
    matrix->add_option("--rank", rank)->required();
    matrix->add_option("--max-threshold", max_threshold)->required();
    matrix->add_option("--class", congruence, "congruence class mod r+1")->required();
    matrix->add_flag("--invert", inverted, "emit the inverse matrix");
    matrix->add_option("--output", output);

    auto* decompose = app.add_subcommand("decompose", "Fusion-product decomposition of ch F^inf");
    decompose->add_option("--rank", rank)->required();
    decompose->add_option("--n", n_text, "fusion weight")->required();
    decompose->add_option("--level", level, "ambient level (defaults to the threshold)");
    decompose->add_option("--output", output);

    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("suite", suite, "suite name, or 'all'")->required();
    verify->add_option("--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(character))
            return cmd_character(rank, level, weight, max_degree, method, output);
        if (app.got_subcommand(kostka)) return cmd_kostka(rank, l_text, n_text, output);
        if (app.got_subcommand(matrix))
            return cmd_kostka_matrix(rank, max_threshold, congruence, inverted, output);
        if (app.got_subcommand(decompose)) return cmd_decompose(rank, n_text, level, output);
        if (app.got_subcommand(verify)) return cmd_verify(suite, output);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "affchar/cache.hpp"
#include "affchar/char_engine.hpp"
#include "affchar/json_io.hpp"

using namespace affchar;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir() {
    static std::mt19937_64 rng(std::random_device{}());
    const fs::path p =
        fs::temp_directory_path() / ("affchar-test-" + std::to_string(rng()));
    fs::create_directories(p);
    return p;
}

JsonValue character_key(int rank, int level, const DynkinLabel& w, const std::string& method,
                        std::optional<int> degree) {
    JsonValue key = JsonValue::object();
    key["command"] = "character";
    key["schema_version"] = kSchemaVersion;
    key["rank"] = rank;
    key["level"] = level;
    key["weight"] = weight_json(w);
    key["method"] = method;
    if (degree) key["max_degree"] = *degree;
    return key;
}

JsonValue compute_doc(int rank, int level, const DynkinLabel& w, int degree) {
    return character_document(rank, level, w, degree, "fermionic", ch_H(w, level, degree));
}

}  // namespace

TEST_CASE("canonical json serialization") {
    JsonValue v = JsonValue::object();
    v["zebra"] = 1;
    v["alpha"] = JsonValue::array();
    v["alpha"].push_back(JsonValue(std::string("x\"y")));
    v["alpha"].push_back(true);
    v["mid"] = Int("123456789012345678901234567890");
    CHECK(v.serialize() ==
          "{\"alpha\":[\"x\\\"y\",true],\"mid\":123456789012345678901234567890,\"zebra\":1}");
    CHECK(v.serialize() == v.serialize());  // byte stable
}

TEST_CASE("json parse round trip and rejection") {
    const auto parsed = parse_json("{\"a\":[1,2],\"b\":\"s\",\"c\":true}");
    REQUIRE(parsed.has_value());
    CHECK(parsed->serialize() == "{\"a\":[1,2],\"b\":\"s\",\"c\":true}");
    CHECK_FALSE(parse_json("{\"a\":1.5}").has_value());  // no floats anywhere
    CHECK_FALSE(parse_json("not json").has_value());
    CHECK_FALSE(parse_json("{\"a\":null}").has_value());
}

TEST_CASE("character document entry ordering") {
    const JsonValue doc = compute_doc(1, 2, DynkinLabel({0}), 2);
    const auto& entries = doc.find("entries")->as_array();
    REQUIRE(entries.size() == 9);
    // sorted by (degree, weight lexicographic)
    CHECK(entries[0].find("degree")->as_integer() == 0);
    CHECK(entries[1].find("weight")->as_array()[0].as_integer() == -2);
    CHECK(entries[8].find("weight")->as_array()[0].as_integer() == 4);
    const JsonValue again = compute_doc(1, 2, DynkinLabel({0}), 2);
    CHECK(doc.serialize() == again.serialize());
}

TEST_CASE("cache hit returns byte-identical documents") {
    const fs::path dir = fresh_dir();
    const CacheStore cache{dir};
    std::mt19937 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        const int rank = 1 + static_cast<int>(rng() % 2);
        const int level = 1 + static_cast<int>(rng() % 2);
        std::vector<int> e(static_cast<std::size_t>(rank), 0);
        e[rng() % static_cast<std::size_t>(rank)] = static_cast<int>(rng() % (level + 1));
        const DynkinLabel w(e);
        const int degree = static_cast<int>(rng() % 4);

        const JsonValue cold = compute_doc(rank, level, w, degree);
        const JsonValue key = character_key(rank, level, w, "fermionic", degree);
        cache.store(key, cold);
        const auto hit = cache.load_exact(key);
        REQUIRE(hit.has_value());
        CHECK(hit->serialize() == cold.serialize());
    }
    // atomic writes leave no temp droppings
    for (const auto& f : fs::directory_iterator(dir))
        CHECK(f.path().extension() == ".json");
    fs::remove_all(dir);
}

TEST_CASE("deeper cache entries serve shallower queries by truncation") {
    const fs::path dir = fresh_dir();
    const CacheStore cache{dir};
    const DynkinLabel w({0});

    const JsonValue deep = compute_doc(1, 2, w, 4);
    cache.store(character_key(1, 2, w, "fermionic", 4), deep);

    const auto found = cache.load_deeper(character_key(1, 2, w, "fermionic", std::nullopt), 2);
    REQUIRE(found.has_value());
    const JsonValue served = truncate_character_document(*found, 2);
    const JsonValue cold = compute_doc(1, 2, w, 2);
    CHECK(served.serialize() == cold.serialize());

    // a deeper request must not be served by the shallow entry
    CHECK_FALSE(cache.load_deeper(character_key(1, 2, w, "fermionic", std::nullopt), 6).has_value());
    fs::remove_all(dir);
}

TEST_CASE("schema version mismatches are ignored") {
    const fs::path dir = fresh_dir();
    const CacheStore cache{dir};
    const DynkinLabel w({0});
    JsonValue key = character_key(1, 2, w, "fermionic", 1);
    key["schema_version"] = kSchemaVersion + 1;
    cache.store(key, compute_doc(1, 2, w, 1));
    CHECK_FALSE(cache.load_exact(key).has_value());
    CHECK_FALSE(
        cache.load_deeper(character_key(1, 2, w, "fermionic", std::nullopt), 0).has_value());
    fs::remove_all(dir);
}

TEST_CASE("disabled cache is inert") {
    const CacheStore off{std::nullopt};
    CHECK_FALSE(off.enabled());
    const JsonValue key = character_key(1, 1, DynkinLabel({0}), "fermionic", 1);
    off.store(key, compute_doc(1, 1, DynkinLabel({0}), 1));
    CHECK_FALSE(off.load_exact(key).has_value());
}

TEST_CASE("corrupt cache files are treated as misses") {
    const fs::path dir = fresh_dir();
    const CacheStore cache{dir};
    const JsonValue key = character_key(1, 2, DynkinLabel({2}), "fermionic", 1);
    std::ofstream(dir / ("affchar-" + CacheStore::hash_key(key) + ".json")) << "{torn";
    CHECK_FALSE(cache.load_exact(key).has_value());
    fs::remove_all(dir);
}

#ifdef AFFCHAR_CLI_PATH
namespace {
int run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(AFFCHAR_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}
}  // namespace

TEST_CASE("cli exit codes") {
    CHECK(run_cli("character --rank 1 --level 2 --weight 0 --max-degree 1",
                  "AFFCHAR_NO_CACHE=1") == 0);
    CHECK(run_cli("character --rank 1 --level 2 --weight 3 --max-degree 1",
                  "AFFCHAR_NO_CACHE=1") == 2);  // not integrable
    CHECK(run_cli("character --rank 1 --level 2 --weight 0 --max-degree 1 --method sideways",
                  "AFFCHAR_NO_CACHE=1") == 2);
    CHECK(run_cli("verify weyl-translation", "AFFCHAR_NO_CACHE=1") == 0);
    CHECK(run_cli("verify no-such-suite", "AFFCHAR_NO_CACHE=1") == 2);
    CHECK(run_cli("frobnicate") == 2);
}

TEST_CASE("cli methods agree and caching is transparent") {
    const fs::path dir = fresh_dir();
    const std::string env = "AFFCHAR_CACHE=" + dir.string();
    const fs::path out1 = dir / "fermionic.json";
    const fs::path out2 = dir / "fermionic-again.json";
    const fs::path out3 = dir / "freudenthal.json";

    REQUIRE(run_cli("character --rank 1 --level 2 --weight 2 --max-degree 3 --output " +
                    out1.string(), env) == 0);
    REQUIRE(run_cli("character --rank 1 --level 2 --weight 2 --max-degree 3 --output " +
                    out2.string(), env) == 0);  // served from cache
    REQUIRE(run_cli("character --rank 1 --level 2 --weight 2 --max-degree 3 "
                    "--method freudenthal --output " + out3.string(), env) == 0);

    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    CHECK(slurp(out1) == slurp(out2));

    const auto doc1 = parse_json(slurp(out1));
    const auto doc3 = parse_json(slurp(out3));
    REQUIRE(doc1.has_value());
    REQUIRE(doc3.has_value());
    CHECK(*doc1->find("entries") == *doc3->find("entries"));
    CHECK(doc1->find("method")->as_string() == "fermionic");
    CHECK(doc3->find("method")->as_string() == "freudenthal");
    fs::remove_all(dir);
}
#endif

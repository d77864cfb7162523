#include "affchar/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace affchar {

namespace fs = std::filesystem;

CacheStore CacheStore::from_env() {
    if (const char* off = std::getenv("AFFCHAR_NO_CACHE"); off && std::string(off) == "1")
        return CacheStore(std::nullopt);
    if (const char* dir = std::getenv("AFFCHAR_CACHE"); dir && *dir)
        return CacheStore(fs::path(dir));
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return CacheStore(fs::path(xdg) / "affchar");
    if (const char* home = std::getenv("HOME"); home && *home)
        return CacheStore(fs::path(home) / ".cache" / "affchar");
    return CacheStore(fs::temp_directory_path() / "affchar-cache");
}

CacheStore::CacheStore(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

std::string CacheStore::hash_key(const JsonValue& key) {
    // FNV-1a 64 over the canonical serialization; stable across platforms.
    const std::string bytes = key.serialize();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

fs::path CacheStore::file_for(const JsonValue& key) const {
    return *dir_ / ("affchar-" + hash_key(key) + ".json");
}

namespace {

struct StoredEntry {
    JsonValue key;
    JsonValue document;
};

std::optional<StoredEntry> read_entry(const fs::path& file) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    auto parsed = parse_json(buf.str());
    if (!parsed || !parsed->is_object()) return std::nullopt;
    const JsonValue* stored_key = parsed->find("cache_key");
    if (!stored_key || !stored_key->is_object()) return std::nullopt;
    const JsonValue* version = stored_key->find("schema_version");
    if (!version || !version->is_integer() || version->as_integer() != kSchemaVersion)
        return std::nullopt;
    StoredEntry entry;
    entry.key = *stored_key;
    entry.document = JsonValue::object();
    for (const auto& [k, v] : parsed->as_object())
        if (k != "cache_key") entry.document[k] = v;
    return entry;
}

}  // namespace

std::optional<JsonValue> CacheStore::load_exact(const JsonValue& key) const {
    if (!enabled()) return std::nullopt;
    auto entry = read_entry(file_for(key));
    if (!entry || entry->key != key) return std::nullopt;
    return std::move(entry->document);
}

std::optional<JsonValue> CacheStore::load_deeper(const JsonValue& key_without_degree,
                                                 int min_degree) const {
    if (!enabled()) return std::nullopt;
    std::error_code ec;
    fs::directory_iterator it(*dir_, ec);
    if (ec) return std::nullopt;
    for (const auto& f : it) {
        if (!f.is_regular_file(ec) || f.path().extension() != ".json") continue;
        auto entry = read_entry(f.path());
        if (!entry) continue;
        const JsonValue* deg = entry->key.find("max_degree");
        if (!deg || !deg->is_integer() || deg->as_integer() < min_degree) continue;
        JsonValue stripped = JsonValue::object();
        for (const auto& [k, v] : entry->key.as_object())
            if (k != "max_degree") stripped[k] = v;
        if (stripped == key_without_degree) return std::move(entry->document);
    }
    return std::nullopt;
}

void CacheStore::store(const JsonValue& key, const JsonValue& document) const {
    if (!enabled()) return;
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    if (ec) return;  // caching is best effort, never fatal

    JsonValue file = document;
    file["cache_key"] = key;
    const fs::path target = file_for(key);
    const fs::path tmp = target.string() + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << file.serialize() << '\n';
        if (!out) {
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
}

}  // namespace affchar

#ifndef AFFCHAR_CACHE_HPP
#define AFFCHAR_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "affchar/json_io.hpp"

namespace affchar {

/// Content-addressed result cache. Files are named by a hash of the
/// canonical QueryKey and hold the CLI output document plus that key;
/// writes go through a temp file and an atomic rename, so a concurrent
/// reader never sees a torn file. Entries whose schema version does not
/// match are ignored, never migrated.
class CacheStore {
public:
    /// AFFCHAR_NO_CACHE=1 disables; AFFCHAR_CACHE overrides the directory,
    /// which defaults to $XDG_CACHE_HOME/affchar or ~/.cache/affchar.
    static CacheStore from_env();
    explicit CacheStore(std::optional<std::filesystem::path> dir);

    bool enabled() const { return dir_.has_value(); }
    const std::filesystem::path& directory() const { return *dir_; }

    /// Document stored under exactly this key, if present and well formed.
    std::optional<JsonValue> load_exact(const JsonValue& key) const;

    /// Document whose key matches `key_without_degree` on every field except
    /// max_degree, stored at max_degree >= min_degree. Serves shallower
    /// queries by windowed truncation instead of recomputation.
    std::optional<JsonValue> load_deeper(const JsonValue& key_without_degree,
                                         int min_degree) const;

    void store(const JsonValue& key, const JsonValue& document) const;

    static std::string hash_key(const JsonValue& key);

private:
    std::filesystem::path file_for(const JsonValue& key) const;
    std::optional<std::filesystem::path> dir_;
};

}  // namespace affchar

#endif

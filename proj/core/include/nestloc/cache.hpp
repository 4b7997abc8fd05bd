#pragma once

#include <functional>
#include <string>

namespace nestloc {

/* File cache for expensive results.  Entries are immutable once written;
 * writes go through a temp file and an atomic rename, so concurrent writers
 * of one key leave exactly one valid file.  A payload that fails the
 * caller's validation is recomputed and overwritten with a warning. */
class ResultCache {
public:
    // empty dir = caching disabled (compute only)
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

    std::string get_or_compute(const std::string& key,
                               const std::function<std::string()>& compute,
                               const std::function<bool(const std::string&)>& validate);

    bool enabled() const { return !dir_.empty(); }
    // filesystem name for a key: sanitized text plus a short content hash
    static std::string filename_for(const std::string& key);

private:
    std::string dir_;
};

// stable 64-bit FNV-1a, used only for cache file names
std::uint64_t fnv1a64(const std::string& s);

} // namespace nestloc

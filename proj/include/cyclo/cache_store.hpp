#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

inline constexpr const char* kCacheFormatVersion = "1";

// One persisted result row. Big integers travel as decimal strings; JSON
// numbers would be lossy.
struct CacheEntry {
    std::uint64_t n = 0;
    std::string A;
    std::string A0;
    std::optional<std::string> B;
    std::optional<std::vector<std::uint64_t>> b_witness; // required whenever B is set
    std::string version = kCacheFormatVersion;

    std::string to_json_line() const;
    static CacheEntry from_json_line(const std::string& line);
};

// Append-only JSON-lines store. On load, later entries for the same n
// supersede earlier ones. A malformed trailing line is treated as a torn
// write: it is dropped with a warning. A malformed line anywhere else is a
// hard error.
class CacheStore {
public:
    static CacheStore load(const std::filesystem::path& path, std::string* warning = nullptr);
    static void append(const std::filesystem::path& path, std::span<const CacheEntry> entries);

    const CacheEntry* find(std::uint64_t n) const;
    void upsert(CacheEntry entry);
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::uint64_t, CacheEntry> entries_;
};

} // namespace cyclo

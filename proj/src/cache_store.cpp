#include "cyclo/cache_store.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace cyclo {

std::string CacheEntry::to_json_line() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["A"] = A;
    j["A0"] = A0;
    if (B) {
        if (!b_witness) throw ContractError("CacheEntry: B without witness");
        j["B"] = *B;
        j["B_witness"] = *b_witness;
    }
    j["v"] = version;
    return j.dump();
}

CacheEntry CacheEntry::from_json_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line); // throws json::exception
    CacheEntry e;
    e.n = j.at("n").get<std::uint64_t>();
    e.A = j.at("A").get<std::string>();
    e.A0 = j.at("A0").get<std::string>();
    if (j.contains("B")) {
        e.B = j.at("B").get<std::string>();
        e.b_witness = j.at("B_witness").get<std::vector<std::uint64_t>>();
    }
    e.version = j.value("v", std::string(kCacheFormatVersion));
    if (e.n == 0) throw DomainError("cache entry: n must be >= 1");
    return e;
}

CacheStore CacheStore::load(const std::filesystem::path& path, std::string* warning) {
    CacheStore store;
    std::ifstream in(path);
    if (!in) {
        if (std::filesystem::exists(path))
            throw IoError("cache: cannot read " + path.string());
        return store; // absent file = empty cache
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            store.upsert(CacheEntry::from_json_line(line));
        } catch (const std::exception& e) {
            // Torn write: only the final line may be damaged.
            if (in.peek() == std::ifstream::traits_type::eof()) {
                if (warning)
                    *warning = "cache: dropped malformed trailing line " + std::to_string(lineno) +
                               " of " + path.string();
                break;
            }
            throw IoError("cache: malformed line " + std::to_string(lineno) + " of " +
                          path.string() + ": " + e.what());
        }
    }
    return store;
}

void CacheStore::append(const std::filesystem::path& path, std::span<const CacheEntry> entries) {
    if (entries.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out) throw IoError("cache: cannot open " + path.string() + " for append");
    for (const CacheEntry& e : entries) out << e.to_json_line() << '\n';
    out.flush();
    if (!out) throw IoError("cache: write failed for " + path.string());
}

const CacheEntry* CacheStore::find(std::uint64_t n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? nullptr : &it->second;
}

void CacheStore::upsert(CacheEntry entry) { entries_[entry.n] = std::move(entry); }

} // namespace cyclo

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "olives/counting.hpp"

namespace olives {

enum class Variant : std::uint8_t { FirstReturn, Closed, Young };

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

// Count for (variant, n): M_n, closed walks of length 2n+2, or Young's
// lattice closed walks of length 2n.
BigCount compute_variant(WalkCounter& counter, Variant v, std::uint64_t n);

// Versioned JSON cache of exact counts keyed by (variant, n):
//
//   {"version": "plates-olives-counts/1",
//    "counts": {"first-return": {"4": "772", ...}, "closed": {...}, ...}}
//
// A file with any other version string is ignored as a whole and replaced
// on the next save.
class CountCache {
public:
    static constexpr std::string_view kVersion = "plates-olives-counts/1";

    explicit CountCache(std::filesystem::path path);

    std::optional<BigCount> get(Variant v, std::uint64_t n) const;
    void put(Variant v, std::uint64_t n, const BigCount& count);

    // Merges with whatever is on disk under an exclusive lock, then replaces
    // the file atomically. No-op when nothing was added.
    void save();

    const std::filesystem::path& path() const { return path_; }
    std::size_t size() const { return entries_.size(); }

private:
    using Key = std::pair<Variant, std::uint64_t>;
    static std::map<Key, std::string> read_file(const std::filesystem::path& path);

    std::filesystem::path path_;
    std::map<Key, std::string> entries_;
    bool dirty_ = false;
};

}  // namespace olives

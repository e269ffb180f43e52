#include "olives/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace olives {

namespace {

constexpr Variant kVariants[] = {Variant::FirstReturn, Variant::Closed, Variant::Young};

// flock() on a sidecar file; released when the descriptor closes.
class FileLock {
public:
    explicit FileLock(const std::filesystem::path& target) {
        const auto lock_path = target.string() + ".lock";
        fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
        if (fd_ < 0) throw std::runtime_error("cannot open lock file " + lock_path);
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            throw std::runtime_error("cannot lock " + lock_path);
        }
    }
    ~FileLock() { ::close(fd_); }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};

}  // namespace

std::string_view variant_name(Variant v) {
    switch (v) {
    case Variant::FirstReturn: return "first-return";
    case Variant::Closed: return "closed";
    case Variant::Young: return "young";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    for (auto v : kVariants) {
        if (variant_name(v) == name) return v;
    }
    return std::nullopt;
}

BigCount compute_variant(WalkCounter& counter, Variant v, std::uint64_t n) {
    switch (v) {
    case Variant::FirstReturn: return counter.count_games(n);
    case Variant::Closed: return counter.count_closed_walks(n);
    case Variant::Young: return counter.count_young_walks(2 * n);
    }
    throw std::logic_error("unknown variant");
}

CountCache::CountCache(std::filesystem::path path) : path_(std::move(path)) {
    entries_ = read_file(path_);
}

std::map<CountCache::Key, std::string> CountCache::read_file(const std::filesystem::path& path) {
    std::map<Key, std::string> out;
    std::ifstream in(path);
    if (!in) return out;
    const auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return out;
    if (doc.value("version", std::string{}) != kVersion) return out;
    const auto counts = doc.find("counts");
    if (counts == doc.end() || !counts->is_object()) return out;
    for (auto v : kVariants) {
        const auto table = counts->find(std::string(variant_name(v)));
        if (table == counts->end() || !table->is_object()) continue;
        for (const auto& [key, value] : table->items()) {
            if (!value.is_string()) continue;
            try {
                const auto n = std::stoull(key);
                parse_decimal(value.get<std::string>());
                out[{v, n}] = value.get<std::string>();
            } catch (const std::exception&) {
                // Unparseable entries are dropped and recomputed.
            }
        }
    }
    return out;
}

std::optional<BigCount> CountCache::get(Variant v, std::uint64_t n) const {
    const auto it = entries_.find({v, n});
    if (it == entries_.end()) return std::nullopt;
    return parse_decimal(it->second);
}

void CountCache::put(Variant v, std::uint64_t n, const BigCount& count) {
    auto text = to_decimal(count);
    auto [it, inserted] = entries_.try_emplace({v, n}, text);
    if (inserted || it->second != text) {
        it->second = std::move(text);
        dirty_ = true;
    }
}

void CountCache::save() {
    if (!dirty_) return;
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    FileLock lock(path_);

    auto merged = read_file(path_);
    for (const auto& [key, value] : entries_) merged[key] = value;

    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [key, value] : merged) {
        counts[std::string(variant_name(key.first))][std::to_string(key.second)] = value;
    }
    nlohmann::json doc;
    doc["version"] = kVersion;
    doc["counts"] = counts;

    const auto tmp = path_.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
        out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path_);
    entries_ = std::move(merged);
    dirty_ = false;
}

}  // namespace olives

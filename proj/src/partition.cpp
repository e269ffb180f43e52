#include "olives/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "olives/errors.hpp"

namespace olives {

namespace {

using Parts = std::vector<Partition::Part>;

__extension__ typedef unsigned __int128 u128;

u128 triangular_below(std::uint64_t k) {  // k(k-1)/2
    return static_cast<u128>(k) * (k - 1) / 2;
}

// Parts are kept nonincreasing, so comparisons use std::greater.
Parts::iterator first_equal(Parts& parts, Partition::Part x) {
    auto it = std::lower_bound(parts.begin(), parts.end(), x, std::greater<>());
    return (it != parts.end() && *it == x) ? it : parts.end();
}

bool contains(const Parts& parts, Partition::Part x) {
    return std::binary_search(parts.begin(), parts.end(), x, std::greater<>());
}

std::size_t multiplicity(const Parts& parts, Partition::Part x) {
    auto range = std::equal_range(parts.begin(), parts.end(), x, std::greater<>());
    return static_cast<std::size_t>(range.second - range.first);
}

void insert_sorted(Parts& parts, Partition::Part x) {
    parts.insert(std::upper_bound(parts.begin(), parts.end(), x, std::greater<>()), x);
}

void erase_one(Parts& parts, Partition::Part x) {
    parts.erase(first_equal(parts, x));
}

// Leftmost copy of x grows, rightmost copy shrinks; both keep the order.
void increment_one(Parts& parts, Partition::Part x) {
    ++*first_equal(parts, x);
}

void decrement_one(Parts& parts, Partition::Part x) {
    auto it = std::upper_bound(parts.begin(), parts.end(), x, std::greater<>());
    --*std::prev(it);
}

// Distinct part values, ascending.
Parts distinct_values(const Parts& parts) {
    Parts out;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (out.empty() || out.back() != *it) out.push_back(*it);
    }
    return out;
}

bool parse_uint(std::string_view text, std::uint32_t& value) {
    if (text.empty() || (text.size() > 1 && text.front() == '0')) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

struct PartitionBuilder {
    static Partition from_sorted(Parts parts) {
        Partition p;
        p.parts_ = std::move(parts);
        return p;
    }
    static const Parts& raw(const Partition& p) { return p.parts_; }
};

std::uint64_t w_cap(std::uint64_t t) {
    auto k = static_cast<std::uint64_t>(
        (1.0L + std::sqrt(1.0L + 8.0L * static_cast<long double>(t))) / 2.0L);
    if (k < 1) k = 1;
    while (triangular_below(k) > t) --k;
    while (triangular_below(k + 1) <= t) ++k;
    return k;
}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    if (std::find(parts_.begin(), parts_.end(), Part{0}) != parts_.end()) {
        throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition::Partition(std::initializer_list<Part> parts)
    : Partition(std::vector<Part>(parts)) {}

std::uint64_t Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::size_t Partition::plates_with(std::uint64_t olives) const {
    if (olives + 1 > std::numeric_limits<Part>::max()) return 0;
    return multiplicity(parts_, static_cast<Part>(olives + 1));
}

std::map<std::uint64_t, std::size_t> Partition::occupancy() const {
    std::map<std::uint64_t, std::size_t> out;
    for (Part x : parts_) ++out[x - 1];
    return out;
}

std::size_t Partition::distinct_olive_counts() const {
    return distinct_values(parts_).size();
}

std::string to_string(const Partition& p) {
    std::string out = "<";
    bool first = true;
    for (auto x : p.parts()) {
        if (!first) out += ',';
        out += std::to_string(x);
        first = false;
    }
    out += '>';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << to_string(p);
}

Partition parse_partition(std::string_view text) {
    if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
        throw ParseError("partition must be enclosed in <>: '" + std::string(text) + "'");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    Parts parts;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view field = body.substr(0, comma);
        std::uint32_t value = 0;
        if (!parse_uint(field, value) || value == 0) {
            throw ParseError("bad partition part '" + std::string(field) + "' in '" +
                             std::string(text) + "'");
        }
        if (!parts.empty() && value > parts.back()) {
            throw ParseError("partition parts must be nonincreasing: '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) throw ParseError("trailing comma in '" + std::string(text) + "'");
    }
    return PartitionBuilder::from_sorted(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : p.parts()) {
        h ^= x;
        h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

void for_each_partition(std::uint64_t max_weight,
                        const std::function<void(const Partition&)>& visit) {
    Parts current;
    // Parts of `remaining`, each at most `cap`, appended to current.
    std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t remaining,
                                                                std::uint64_t cap) {
        if (remaining == 0) {
            visit(PartitionBuilder::from_sorted(current));
            return;
        }
        for (std::uint64_t x = std::min(cap, remaining); x >= 1; --x) {
            current.push_back(static_cast<Partition::Part>(x));
            rec(remaining - x, x);
            current.pop_back();
        }
    };
    for (std::uint64_t w = 0; w <= max_weight; ++w) rec(w, w);
}

Move Move::plate_remove_complex(std::uint32_t a, std::uint32_t b) {
    return {MoveKind::PlateRemoveComplex, std::min(a, b), std::max(a, b)};
}

int Move::weight_delta() const {
    switch (kind) {
    case MoveKind::PlateAdd:
    case MoveKind::OliveAddFirst:
    case MoveKind::OliveAddLater:
        return +1;
    case MoveKind::OliveRemove:
    case MoveKind::PlateRemoveSimple:
    case MoveKind::PlateRemoveComplex:
        return -1;
    }
    return 0;
}

std::string to_string(const Move& m) {
    switch (m.kind) {
    case MoveKind::PlateAdd: return "P+";
    case MoveKind::OliveAddFirst: return "O+f";
    case MoveKind::OliveAddLater: return "O+l:" + std::to_string(m.i);
    case MoveKind::OliveRemove: return "O-:" + std::to_string(m.i);
    case MoveKind::PlateRemoveSimple: return "P-s";
    case MoveKind::PlateRemoveComplex:
        return "P-c:" + std::to_string(m.i) + "," + std::to_string(m.j);
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Move& m) { return os << to_string(m); }

Move parse_move(std::string_view text) {
    auto bad = [&]() { return ParseError("bad move token '" + std::string(text) + "'"); };
    if (text == "P+") return Move::plate_add();
    if (text == "O+f") return Move::olive_add_first();
    if (text == "P-s") return Move::plate_remove_simple();

    auto with_count = [&](std::string_view prefix, MoveKind kind) -> std::optional<Move> {
        if (!text.starts_with(prefix)) return std::nullopt;
        std::uint32_t i = 0;
        if (!parse_uint(text.substr(prefix.size()), i) || i == 0) throw bad();
        return Move{kind, i};
    };
    if (auto m = with_count("O+l:", MoveKind::OliveAddLater)) return *m;
    if (auto m = with_count("O-:", MoveKind::OliveRemove)) return *m;

    if (text.starts_with("P-c:")) {
        std::string_view body = text.substr(4);
        auto comma = body.find(',');
        if (comma == std::string_view::npos) throw bad();
        std::uint32_t i = 0;
        std::uint32_t j = 0;
        if (!parse_uint(body.substr(0, comma), i) || !parse_uint(body.substr(comma + 1), j) ||
            i == 0 || j == 0 || i > j) {
            throw bad();
        }
        return Move::plate_remove_complex(i, j);
    }
    throw bad();
}

bool is_legal(const Partition& p, const Move& m) {
    const Parts& parts = PartitionBuilder::raw(p);
    switch (m.kind) {
    case MoveKind::PlateAdd:
        return true;
    case MoveKind::OliveAddFirst:
    case MoveKind::PlateRemoveSimple:
        return contains(parts, 1);
    case MoveKind::OliveAddLater:
    case MoveKind::OliveRemove:
        return m.i >= 1 && contains(parts, m.i + 1);
    case MoveKind::PlateRemoveComplex:
        if (m.i < 1 || m.i > m.j) return false;
        if (m.i == m.j) return multiplicity(parts, m.i + 1) >= 2;
        return contains(parts, m.i + 1) && contains(parts, m.j + 1);
    }
    return false;
}

namespace {

Partition apply_unchecked(const Partition& p, const Move& m) {
    Parts parts = PartitionBuilder::raw(p);
    switch (m.kind) {
    case MoveKind::PlateAdd:
        parts.push_back(1);
        break;
    case MoveKind::OliveAddFirst:
        increment_one(parts, 1);
        break;
    case MoveKind::OliveAddLater:
        increment_one(parts, m.i + 1);
        break;
    case MoveKind::OliveRemove:
        decrement_one(parts, m.i + 1);
        break;
    case MoveKind::PlateRemoveSimple:
        parts.pop_back();
        break;
    case MoveKind::PlateRemoveComplex:
        erase_one(parts, m.i + 1);
        erase_one(parts, m.j + 1);
        insert_sorted(parts, m.i + m.j + 1);
        break;
    }
    return PartitionBuilder::from_sorted(std::move(parts));
}

}  // namespace

Partition apply_move(const Partition& p, const Move& m) {
    if (!is_legal(p, m)) {
        throw IllegalMove("move " + to_string(m) + " is not legal at " + to_string(p));
    }
    return apply_unchecked(p, m);
}

std::vector<Transition> legal_moves(const Partition& p, bool allow_complex) {
    const Parts& parts = PartitionBuilder::raw(p);
    const Parts values = distinct_values(parts);
    const bool has_empty_plate = !values.empty() && values.front() == 1;

    std::vector<Move> moves;
    moves.push_back(Move::plate_add());
    if (has_empty_plate) moves.push_back(Move::olive_add_first());
    for (auto x : values) {
        if (x >= 2) moves.push_back(Move::olive_add_later(x - 1));
    }
    for (auto x : values) {
        if (x >= 2) moves.push_back(Move::olive_remove(x - 1));
    }
    if (has_empty_plate) moves.push_back(Move::plate_remove_simple());
    if (allow_complex) {
        for (std::size_t a = 0; a < values.size(); ++a) {
            if (values[a] < 2) continue;
            for (std::size_t b = a; b < values.size(); ++b) {
                if (a == b && multiplicity(parts, values[a]) < 2) continue;
                moves.push_back(Move::plate_remove_complex(values[a] - 1, values[b] - 1));
            }
        }
    }

    std::vector<Transition> out;
    out.reserve(moves.size());
    for (const auto& m : moves) out.push_back({m, apply_unchecked(p, m)});
    return out;
}

std::optional<Move> find_move(const Partition& from, const Partition& to, bool allow_complex) {
    const auto wf = from.weight();
    const auto wt = to.weight();
    if (wf + 1 != wt && wt + 1 != wf) return std::nullopt;
    for (auto& t : legal_moves(from, allow_complex)) {
        if (t.result == to) return t.move;
    }
    return std::nullopt;
}

bool MoveCapacityProfile::within_caps(std::uint64_t olives) const {
    const std::uint64_t w = w_cap(olives);
    return plate_add == 1 && olive_add_first <= 1 && plate_remove_simple <= 1 &&
           olive_add_later <= w && olive_remove <= w - 1 && plate_remove_complex <= w * w;
}

MoveCapacityProfile move_capacity_profile(const Partition& p) {
    MoveCapacityProfile prof;
    for (const auto& t : legal_moves(p, true)) {
        switch (t.move.kind) {
        case MoveKind::PlateAdd: ++prof.plate_add; break;
        case MoveKind::OliveAddFirst: ++prof.olive_add_first; break;
        case MoveKind::OliveAddLater: ++prof.olive_add_later; break;
        case MoveKind::OliveRemove: ++prof.olive_remove; break;
        case MoveKind::PlateRemoveSimple: ++prof.plate_remove_simple; break;
        case MoveKind::PlateRemoveComplex: ++prof.plate_remove_complex; break;
        }
    }
    return prof;
}

PartitionInterner::PartitionInterner(std::uint64_t max_weight, std::size_t max_states)
    : max_weight_(max_weight), max_states_(max_states) {}

StateId PartitionInterner::intern(const Partition& p) {
    if (auto it = ids_.find(p); it != ids_.end()) return it->second;
    if (p.weight() > max_weight_) {
        throw std::out_of_range("partition " + to_string(p) + " exceeds interner weight " +
                                std::to_string(max_weight_));
    }
    if (partitions_.size() >= max_states_) {
        throw ResourceLimit("interned state count exceeded the cap of " +
                            std::to_string(max_states_));
    }
    const auto id = static_cast<StateId>(partitions_.size());
    partitions_.push_back(p);
    ids_.emplace(p, id);
    return id;
}

std::optional<StateId> PartitionInterner::find(const Partition& p) const {
    if (auto it = ids_.find(p); it != ids_.end()) return it->second;
    return std::nullopt;
}

void PartitionInterner::raise_max_weight(std::uint64_t w) {
    max_weight_ = std::max(max_weight_, w);
}

}  // namespace olives

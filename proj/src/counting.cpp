#include "olives/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "olives/errors.hpp"

namespace olives {

std::string to_decimal(const BigCount& x) { return x.str(); }

BigCount parse_decimal(std::string_view text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("not a decimal count: '" + std::string(text) + "'");
    }
    return BigCount(std::string(text));
}

WalkCounter::WalkCounter(std::size_t max_states) : interner_(0, max_states) {}

void WalkCounter::ensure_weight(std::uint64_t w) {
    const auto old = interner_.max_weight();
    if (w <= old) return;
    for (auto& lists : successors_) {
        for (StateId id = 0; id < lists.size(); ++id) {
            if (lists[id] && weight_[id] == old) lists[id].reset();
        }
    }
    interner_.raise_max_weight(w);
}

const std::vector<StateId>& WalkCounter::successors(StateId id, bool allow_complex) {
    auto& lists = successors_[allow_complex ? 1 : 0];
    if (lists.size() <= id) lists.resize(interner_.size());
    if (lists[id]) return *lists[id];

    const Partition here = interner_.at(id);
    std::vector<StateId> out;
    for (const auto& t : legal_moves(here, allow_complex)) {
        const auto w = t.result.weight();
        if (w > interner_.max_weight()) continue;
        const StateId next = interner_.intern(t.result);
        if (weight_.size() <= next) weight_.resize(next + 1);
        weight_[next] = w;
        out.push_back(next);
    }
    if (lists.size() <= id) lists.resize(interner_.size());
    lists[id] = std::move(out);
    return *lists[id];
}

BigCount WalkCounter::count(const WalkSpec& spec) {
    const std::uint64_t steps = spec.length;
    const std::uint64_t ws = spec.start.weight();
    const std::uint64_t we = spec.end.weight();
    if ((ws + we + steps) % 2 != 0) return 0;
    if (ws > we + steps || we > ws + steps) return 0;

    // Heaviest state a layer may hold. Each move changes weight by exactly
    // one, so layer k can neither outrun the start nor fail to reach the end.
    auto bound = [&](std::uint64_t k) {
        return spec.prune ? std::min(ws + k, we + (steps - k)) : ws + k;
    };
    std::uint64_t heaviest = 0;
    for (std::uint64_t k = 0; k <= steps; ++k) heaviest = std::max(heaviest, bound(k));
    ensure_weight(heaviest);

    const StateId start = interner_.intern(spec.start);
    if (weight_.size() <= start) weight_.resize(start + 1);
    weight_[start] = ws;

    std::unordered_map<StateId, BigCount> layer{{start, BigCount(1)}};
    for (std::uint64_t k = 0; k < steps; ++k) {
        const bool interim = k + 1 < steps;
        const std::uint64_t cap = bound(k + 1);
        std::unordered_map<StateId, BigCount> next;
        next.reserve(layer.size() * 2);
        for (const auto& [id, ways] : layer) {
            for (StateId to : successors(id, spec.allow_complex)) {
                const auto w = weight_[to];
                if (w > cap) continue;
                if (spec.avoid_empty && interim && w == 0) continue;
                next[to] += ways;
            }
        }
        layer = std::move(next);
    }

    const auto end = interner_.find(spec.end);
    if (!end) return 0;
    auto it = layer.find(*end);
    return it == layer.end() ? BigCount(0) : it->second;
}

BigCount WalkCounter::count_games(std::uint64_t n, bool prune) {
    return count({Partition{1}, Partition{1}, 2 * n, true, true, prune});
}

BigCount WalkCounter::count_closed_walks(std::uint64_t n, bool allow_complex) {
    return count({Partition{}, Partition{}, 2 * n + 2, allow_complex, false, true});
}

BigCount WalkCounter::count_young_walks(std::uint64_t length) {
    if (length % 2 != 0) throw std::invalid_argument("closed walks have even length");
    return count({Partition{}, Partition{}, length, false, false, true});
}

BigCount count_games(std::uint64_t n) { return WalkCounter().count_games(n); }
BigCount count_closed_walks(std::uint64_t n) { return WalkCounter().count_closed_walks(n); }
BigCount count_young_walks(std::uint64_t length) {
    return WalkCounter().count_young_walks(length);
}

void enumerate_young_walks(std::uint64_t length,
                           const std::function<void(std::span<const Partition>)>& visit) {
    std::vector<Partition> walk{Partition{}};
    walk.reserve(length + 1);
    std::function<void()> rec = [&]() {
        const std::uint64_t left = length - (walk.size() - 1);
        if (left == 0) {
            if (walk.back().empty()) visit(walk);
            return;
        }
        for (auto& t : legal_moves(walk.back(), false)) {
            if (t.result.weight() > left - 1) continue;
            walk.push_back(std::move(t.result));
            rec();
            walk.pop_back();
        }
    };
    rec();
}

Game lift_young_walk(std::span<const Partition> walk) {
    if (walk.empty() || walk.size() % 2 == 0) {
        throw InvalidWalk("a closed walk of even length has an odd number of states");
    }
    if (!walk.front().empty() || !walk.back().empty()) {
        throw InvalidWalk("walk must start and end at the empty partition");
    }
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
        if (!find_move(walk[k], walk[k + 1], false)) {
            throw InvalidWalk("no Young's-lattice step from " + to_string(walk[k]) + " to " +
                              to_string(walk[k + 1]));
        }
    }

    std::vector<Partition> lifted;
    lifted.reserve(walk.size() + 2);
    lifted.emplace_back();
    for (const auto& p : walk) {
        std::vector<Partition::Part> parts(p.parts().begin(), p.parts().end());
        parts.push_back(1);
        lifted.emplace_back(std::move(parts));
    }
    lifted.emplace_back();

    std::vector<Move> moves;
    moves.reserve(lifted.size() - 1);
    for (std::size_t k = 0; k + 1 < lifted.size(); ++k) {
        moves.push_back(*find_move(lifted[k], lifted[k + 1]));
    }
    return validate_game(moves);
}

BigCount double_factorial(std::int64_t m) {
    if (m < -1 || m % 2 == 0) {
        throw std::invalid_argument("double factorial needs an odd m >= -1, got " +
                                    std::to_string(m));
    }
    BigCount out = 1;
    for (std::int64_t k = m; k > 1; k -= 2) out *= k;
    return out;
}

BigCount weighted_dyck_sum_brute(std::uint64_t v) {
    BigCount total = 0;
    const std::uint64_t len = 2 * v;
    std::function<void(std::uint64_t, std::uint64_t, const BigCount&)> rec =
        [&](std::uint64_t pos, std::uint64_t h, const BigCount& weight) {
            if (pos == len) {
                if (h == 0) total += weight;
                return;
            }
            if (h + 1 <= len - pos - 1) rec(pos + 1, h + 1, weight * (h + 1));
            if (h > 0) rec(pos + 1, h - 1, weight);
        };
    rec(0, 0, BigCount(1));
    return total;
}

BigCount weighted_dyck_sum_dp(std::uint64_t v) {
    // ways[h]: weighted prefixes ending at height h.
    std::vector<BigCount> ways(v + 2, BigCount(0));
    ways[0] = 1;
    for (std::uint64_t pos = 0; pos < 2 * v; ++pos) {
        std::vector<BigCount> next(v + 2, BigCount(0));
        for (std::uint64_t h = 0; h <= v; ++h) {
            if (ways[h] == 0) continue;
            if (h + 1 <= v) next[h + 1] += ways[h] * (h + 1);
            if (h > 0) next[h - 1] += ways[h];
        }
        ways = std::move(next);
    }
    return ways[0];
}

BigCount weighted_dyck_sum(std::uint64_t v) {
    return v <= kWeightedDyckCrossover ? weighted_dyck_sum_brute(v) : weighted_dyck_sum_dp(v);
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigCount r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigCount catalan(std::uint64_t n) { return binomial(2 * n, n) / (n + 1); }

BigCount count_proper_dyck_paths(std::uint64_t n) {
    const std::uint64_t len = 2 * n + 2;
    std::uint64_t found = 0;
    std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t pos,
                                                                std::uint64_t h) {
        if (pos == len) {
            if (h == 0) ++found;
            return;
        }
        if (h + 1 <= len - pos - 1) rec(pos + 1, h + 1);
        // Back on the axis only at the very end.
        if (h > 1 || (h == 1 && pos + 1 == len)) rec(pos + 1, h - 1);
    };
    rec(0, 0);
    return found;
}

BigCount tangent_numbers(std::uint64_t n) {
    // Entringer triangle: row k, entries 0..k; zig-zag count of size m is
    // the last entry of row m.
    const std::uint64_t m = 2 * n + 1;
    std::vector<BigCount> row{BigCount(1)};
    for (std::uint64_t k = 1; k <= m; ++k) {
        std::vector<BigCount> next(k + 1, BigCount(0));
        for (std::uint64_t j = 1; j <= k; ++j) next[j] = next[j - 1] + row[k - j];
        row = std::move(next);
    }
    return row.back();
}

std::uint64_t count_zigzag_permutations(std::uint64_t size) {
    if (size == 0 || size % 2 != 0 || size > 12) {
        throw std::invalid_argument("zig-zag brute force needs an even size in 2..12");
    }
    std::vector<std::uint32_t> perm(size);
    std::iota(perm.begin(), perm.end(), 1u);
    std::uint64_t found = 0;
    do {
        // Read counter-clockwise from the global minimum.
        bool ok = perm[0] == 1;
        for (std::uint64_t i = 0; i < size && ok; ++i) {
            const auto left = perm[(i + size - 1) % size];
            const auto right = perm[(i + 1) % size];
            // Odd 1-based positions are minima, even ones maxima.
            ok = (i % 2 == 0) ? (perm[i] < left && perm[i] < right)
                              : (perm[i] > left && perm[i] > right);
        }
        if (ok) ++found;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

std::array<std::pair<std::uint64_t, std::uint64_t>, 5> geometric_class_reference() {
    return {{{0, 1}, {1, 2}, {2, 19}, {3, 428}, {4, 17746}}};
}

}  // namespace olives

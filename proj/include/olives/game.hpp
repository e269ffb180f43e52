#pragma once

// Games of plates and olives: validated move sequences from the empty table
// back to the empty table, visiting it nowhere in between.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "olives/partition.hpp"

namespace olives {

inline constexpr std::uint64_t kDefaultOracleCeiling = 6;

class Game {
public:
    const std::vector<Move>& moves() const { return moves_; }
    // trace()[k] is the table after k moves; size is moves().size() + 1.
    const std::vector<Partition>& trace() const { return trace_; }
    // Add moves excluding the opening plate add.
    std::uint64_t length() const { return (moves_.size() - 2) / 2; }

    friend bool operator==(const Game& a, const Game& b) { return a.moves_ == b.moves_; }

private:
    friend Game validate_game(std::span<const Move> moves);
    friend struct GameBuilder;
    std::vector<Move> moves_;
    std::vector<Partition> trace_;
};

// Replays `moves` from the empty table. Throws IllegalMove, PrematureEmpty
// or NotClosed.
Game validate_game(std::span<const Move> moves);

// Whitespace-separated move tokens; throws ParseError on bad tokens and the
// validate_game errors otherwise.
std::vector<Move> parse_moves(std::string_view line);
Game parse_game(std::string_view line);
std::string to_string(const Game& g);

// Visits every game of length n once, in lexicographic order of the move
// tokens. Throws CeilingExceeded when n > ceiling.
void enumerate_games(std::uint64_t n, const std::function<void(const Game&)>& visit,
                     std::uint64_t ceiling = kDefaultOracleCeiling);

std::vector<Game> collect_games(std::uint64_t n, std::uint64_t ceiling = kDefaultOracleCeiling);

enum class SkeletonLabel : std::uint8_t {
    PlateAdd,
    OliveAddFirst,
    OliveAddLater,
    PlateRemoveSimple,
    PlateRemoveComplex,
    OliveRemove,
};

using Skeleton = std::vector<SkeletonLabel>;

Skeleton skeleton(const Game& g);
std::string_view label_text(SkeletonLabel label);
std::string to_string(const Skeleton& s);

struct GameStats {
    std::uint64_t first_olive_adds = 0;   // v_f
    std::uint64_t later_olive_adds = 0;   // v_l
    std::uint64_t simple_removes = 0;     // p_s, final move excluded
    std::uint64_t complex_removes = 0;    // p_c

    std::uint64_t olive_adds() const { return first_olive_adds + later_olive_adds; }
    std::uint64_t plate_removes() const { return simple_removes + complex_removes; }

    friend bool operator==(const GameStats&, const GameStats&) = default;
    friend auto operator<=>(const GameStats&, const GameStats&) = default;
};

GameStats game_stats(const Game& g);

enum class DyckStep : std::uint8_t { Up, Down };

struct DyckPath {
    std::vector<DyckStep> steps;

    // Height of the lower end of each step.
    std::vector<std::uint64_t> heights() const;
    std::size_t semilength() const { return steps.size() / 2; }
    // Never below zero and ends at zero.
    bool is_valid() const;
};

// One Up per olive add and one Down per olive remove, in game order.
DyckPath olive_dyck_path(const Game& g);

using StatsHistogram = std::map<GameStats, std::uint64_t>;

StatsHistogram stats_histogram(std::uint64_t n, std::uint64_t ceiling = kDefaultOracleCeiling);

// Header "v_f,v_l,p_s,p_c,count", rows in ascending stats order.
std::string histogram_csv(const StatsHistogram& h);

}  // namespace olives

#pragma once

// Game states as integer partitions and the moves between them.
//
// A table with k plates is the partition <a_1, ..., a_k> (nonincreasing,
// positive) where part a_j stands for a plate holding a_j - 1 olives. The
// weight of a state is therefore plates + olives, and every move changes it
// by exactly one.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace olives {

// Largest t' >= 1 with t'(t'-1)/2 <= t. Bounds the number of distinct
// olive counts that can coexist on a table holding t olives.
std::uint64_t w_cap(std::uint64_t t);

class Partition {
public:
    using Part = std::uint32_t;

    Partition() = default;

    // Parts may be given in any order; zero parts are rejected.
    explicit Partition(std::vector<Part> parts);
    Partition(std::initializer_list<Part> parts);

    std::span<const Part> parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    std::size_t plate_count() const { return parts_.size(); }
    std::uint64_t weight() const;
    std::uint64_t olive_count() const { return weight() - plate_count(); }

    // a_i: number of plates carrying exactly `olives` olives.
    std::size_t plates_with(std::uint64_t olives) const;
    // i -> a_i for every i with a_i != 0.
    std::map<std::uint64_t, std::size_t> occupancy() const;
    std::size_t distinct_olive_counts() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    friend struct PartitionBuilder;
    std::vector<Part> parts_;  // nonincreasing
};

std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

// Accepts "<3,2,1>" and "<>"; parts must already be nonincreasing.
Partition parse_partition(std::string_view text);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

// Calls `visit` once for every partition of weight 0..max_weight, in order
// of increasing weight.
void for_each_partition(std::uint64_t max_weight,
                        const std::function<void(const Partition&)>& visit);

enum class MoveKind : std::uint8_t {
    PlateAdd,
    OliveAddFirst,
    OliveAddLater,
    OliveRemove,
    PlateRemoveSimple,
    PlateRemoveComplex,
};

// A move on indistinguishable plates, named by the olive counts it touches:
// OliveAddLater/OliveRemove carry the olive count `i` of the source plate,
// PlateRemoveComplex carries the unordered pair {i, j} stored with i <= j.
struct Move {
    MoveKind kind = MoveKind::PlateAdd;
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    static Move plate_add() { return {MoveKind::PlateAdd}; }
    static Move olive_add_first() { return {MoveKind::OliveAddFirst}; }
    static Move olive_add_later(std::uint32_t olives) {
        return {MoveKind::OliveAddLater, olives};
    }
    static Move olive_remove(std::uint32_t olives) {
        return {MoveKind::OliveRemove, olives};
    }
    static Move plate_remove_simple() { return {MoveKind::PlateRemoveSimple}; }
    static Move plate_remove_complex(std::uint32_t a, std::uint32_t b);

    int weight_delta() const;
    bool is_add() const { return weight_delta() > 0; }

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

// "P+", "O+f", "O+l:i", "O-:i", "P-s", "P-c:i,j" (i <= j).
std::string to_string(const Move& m);
std::ostream& operator<<(std::ostream& os, const Move& m);
Move parse_move(std::string_view text);

struct Transition {
    Move move;
    Partition result;
};

// One entry per legal move at p. Complex plate removes are omitted when
// allow_complex is false, which leaves the Hasse diagram of Young's lattice.
std::vector<Transition> legal_moves(const Partition& p, bool allow_complex = true);

bool is_legal(const Partition& p, const Move& m);

// Throws IllegalMove when m is not available at p.
Partition apply_move(const Partition& p, const Move& m);

// The move taking `from` to `to`, if one exists. Unique when it exists since
// the transition graph is simple.
std::optional<Move> find_move(const Partition& from, const Partition& to,
                              bool allow_complex = true);

struct MoveCapacityProfile {
    std::size_t plate_add = 0;
    std::size_t olive_add_first = 0;
    std::size_t olive_add_later = 0;
    std::size_t olive_remove = 0;
    std::size_t plate_remove_simple = 0;
    std::size_t plate_remove_complex = 0;

    // Per-state caps for a table holding `olives` olives.
    bool within_caps(std::uint64_t olives) const;

    friend bool operator==(const MoveCapacityProfile&,
                           const MoveCapacityProfile&) = default;
};

MoveCapacityProfile move_capacity_profile(const Partition& p);

using StateId = std::uint32_t;

inline constexpr std::size_t kDefaultMaxStates = 10'000'000;

// Dense ids for partitions up to a maximum weight. Ids are assigned in
// interning order and never change.
class PartitionInterner {
public:
    explicit PartitionInterner(std::uint64_t max_weight,
                               std::size_t max_states = kDefaultMaxStates);

    // Throws std::out_of_range above max_weight, ResourceLimit past max_states.
    StateId intern(const Partition& p);
    std::optional<StateId> find(const Partition& p) const;
    const Partition& at(StateId id) const { return partitions_.at(id); }

    std::size_t size() const { return partitions_.size(); }
    std::uint64_t max_weight() const { return max_weight_; }
    std::size_t max_states() const { return max_states_; }
    void raise_max_weight(std::uint64_t w);

private:
    std::uint64_t max_weight_;
    std::size_t max_states_;
    std::unordered_map<Partition, StateId, PartitionHash> ids_;
    std::vector<Partition> partitions_;
};

}  // namespace olives

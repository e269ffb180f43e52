#pragma once

// Exact counting: games via a layered walk DP over interned partitions,
// the closed-walk and Young's-lattice variants, the lower-bound injection,
// and the classical sequences that sit next to M_n.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "olives/game.hpp"
#include "olives/partition.hpp"

namespace olives {

using BigCount = boost::multiprecision::cpp_int;

std::string to_decimal(const BigCount& x);
BigCount parse_decimal(std::string_view text);

// Walks of `length` steps from `start` to `end`.
struct WalkSpec {
    Partition start;
    Partition end;
    std::uint64_t length = 0;
    bool allow_complex = true;  // include complex plate-remove edges
    bool avoid_empty = false;   // no interim visits to the empty table
    bool prune = true;          // drop states too heavy to return in time
};

// Layered walk counter. Keeps one interner and the memoized successor lists
// for the whole run, so repeated counts for growing n reuse earlier work.
class WalkCounter {
public:
    explicit WalkCounter(std::size_t max_states = kDefaultMaxStates);

    BigCount count(const WalkSpec& spec);

    // M_n: walks <1> -> <1> of length 2n avoiding the empty table. The forced
    // opening plate add and closing simple remove are implied.
    BigCount count_games(std::uint64_t n, bool prune = true);
    // Closed walks at the empty table of length 2n+2, interim returns allowed.
    BigCount count_closed_walks(std::uint64_t n, bool allow_complex = true);
    // Closed walks at the empty table in Young's lattice.
    BigCount count_young_walks(std::uint64_t length);

    std::size_t state_count() const { return interner_.size(); }
    std::size_t max_states() const { return interner_.max_states(); }

private:
    const std::vector<StateId>& successors(StateId id, bool allow_complex);
    void ensure_weight(std::uint64_t w);

    PartitionInterner interner_;
    std::vector<std::uint64_t> weight_;
    // Successor lists are cut at the interner's weight bound; lists of
    // states sitting on the bound are dropped when the bound is raised.
    std::array<std::vector<std::optional<std::vector<StateId>>>, 2> successors_;
};

BigCount count_games(std::uint64_t n);
BigCount count_closed_walks(std::uint64_t n);
BigCount count_young_walks(std::uint64_t length);

// Visits every closed walk at the empty table of the given length in
// Young's lattice (interim returns allowed).
void enumerate_young_walks(std::uint64_t length,
                           const std::function<void(std::span<const Partition>)>& visit);

// Lifts a closed Young's-lattice walk of length 2n to a game of length n:
// prepend the empty table, append it again, and add one empty plate to every
// partition in between. Throws InvalidWalk.
Game lift_young_walk(std::span<const Partition> walk);

// m!! for odd m >= -1. Throws std::invalid_argument otherwise.
BigCount double_factorial(std::int64_t m);

// Sum over Dyck paths of semilength v of the product of (h + 1) over up
// steps at height h.
BigCount weighted_dyck_sum_brute(std::uint64_t v);
BigCount weighted_dyck_sum_dp(std::uint64_t v);
inline constexpr std::uint64_t kWeightedDyckCrossover = 12;
BigCount weighted_dyck_sum(std::uint64_t v);

BigCount binomial(std::uint64_t n, std::uint64_t k);
BigCount catalan(std::uint64_t n);
// Paths of semilength n+1 touching the axis only at their endpoints.
BigCount count_proper_dyck_paths(std::uint64_t n);

// Zig-zag permutations of {1..2n+2} read around the circle from the global
// minimum, via the Entringer triangle.
BigCount tangent_numbers(std::uint64_t n);
// Brute force over all permutations of {1..size}; size must be even and
// at most 12.
std::uint64_t count_zigzag_permutations(std::uint64_t size);

// Geometric classes on the sphere for n = 0..4. Tabulated, not computed.
std::array<std::pair<std::uint64_t, std::uint64_t>, 5> geometric_class_reference();

// Published values used as golden data.
namespace known {
inline constexpr std::array<std::uint64_t, 5> games{1, 2, 10, 76, 772};
inline constexpr std::array<std::uint64_t, 5> zigzag{1, 2, 16, 272, 7936};
inline constexpr std::array<std::uint64_t, 5> catalan{1, 1, 2, 5, 14};
// Earlier published counts for n = 2, 3, 4 that included interim returns.
inline constexpr std::array<std::pair<std::uint64_t, std::uint64_t>, 3> closed_walks{
    {{2, 15}, {3, 107}, {4, 981}}};
inline constexpr double ratio_at_18 = 1.09206;
}  // namespace known

}  // namespace olives

#pragma once

// Self-check suites behind `olives verify`. Each suite returns one result
// per named check; a suite passes when every check does.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "olives/game.hpp"
#include "olives/partition.hpp"

namespace olives {

enum class Suite : std::uint8_t {
    PaperValues,  // published sequence values and the n = 18 ratio
    Identities,   // Dyck, Young, Catalan, zig-zag and double-factorial identities
    Oracle,       // enumeration against the walk DP
    Bounds,       // double-factorial lower bound, constructively and numerically
    Claims,       // per-state move caps and per-game relations
    Erratum,      // earlier closed-walk counts with interim returns
};

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t oracle_ceiling = kDefaultOracleCeiling;
    std::size_t max_states = kDefaultMaxStates;
    std::uint64_t bounds_max_n = 18;
    std::uint64_t claims_max_weight = 20;
};

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options = {});

}  // namespace olives

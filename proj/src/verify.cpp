#include "olives/verify.hpp"

#include <set>
#include <sstream>

#include "olives/analysis.hpp"
#include "olives/counting.hpp"

namespace olives {

namespace {

class Checks {
public:
    void add(std::string name, bool passed, std::string detail = {}) {
        results_.push_back({std::move(name), passed, std::move(detail)});
    }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

template <class Expected, class Compute>
std::string compare_sequence(const Expected& expected, Compute compute, bool& ok) {
    std::ostringstream mismatch;
    ok = true;
    for (std::uint64_t n = 0; n < expected.size(); ++n) {
        const BigCount got = compute(n);
        if (got != expected[n]) {
            ok = false;
            mismatch << "n=" << n << ": got " << to_decimal(got) << ", expected " << expected[n]
                     << "; ";
        }
    }
    return mismatch.str();
}

void paper_values(Checks& checks, const VerifyOptions& opt) {
    WalkCounter counter(opt.max_states);
    bool ok = false;

    auto detail = compare_sequence(known::games, [&](auto n) { return counter.count_games(n); }, ok);
    checks.add("M_n for n=0..4 is 1, 2, 10, 76, 772", ok, detail);

    detail = compare_sequence(known::zigzag, [](auto n) { return tangent_numbers(n); }, ok);
    checks.add("zig-zag counts for n=0..4 are 1, 2, 16, 272, 7936", ok, detail);

    detail = compare_sequence(known::catalan, [](auto n) { return catalan(n); }, ok);
    checks.add("Catalan numbers for n=0..4 are 1, 1, 2, 5, 14", ok, detail);

    const auto table = geometric_class_reference();
    const std::array<std::uint64_t, 5> geometric{1, 2, 19, 428, 17746};
    ok = true;
    for (std::size_t k = 0; k < table.size(); ++k) {
        ok = ok && table[k].first == k && table[k].second == geometric[k];
    }
    checks.add("geometric class table for n=0..4 is 1, 2, 19, 428, 17746", ok);

    std::vector<std::string> one;
    enumerate_games(1, [&](const Game& g) { one.push_back(to_string(g)); });
    checks.add("the two games of length 1",
               one == std::vector<std::string>{"P+ O+f O-:1 P-s", "P+ P+ P-s P-s"});

    const auto ratios = ratio_table(18, [&](std::uint64_t n) { return counter.count_games(n); });
    const Real r18 = ratios.back().ratio;
    checks.add("(1/18) M_18^(1/18) = 1.09206 +- 1e-5",
               abs(r18 - Real(known::ratio_at_18)) < Real("1e-5"),
               "computed " + format_fixed(r18, 10));
    bool decreasing = true;
    for (const auto& row : ratios) decreasing = decreasing && !row.breaks_decrease;
    checks.add("(1/n) M_n^(1/n) strictly decreasing for n=1..18", decreasing);
}

void erratum(Checks& checks, const VerifyOptions& opt) {
    WalkCounter counter(opt.max_states);
    for (const auto& [n, expected] : known::closed_walks) {
        const auto with_complex = counter.count_closed_walks(n, true);
        const auto young_only = counter.count_closed_walks(n, false);
        checks.add("closed walks with interim returns, n=" + std::to_string(n) + " = " +
                       std::to_string(expected),
                   with_complex == expected,
                   "with complex removes " + to_decimal(with_complex) + ", without " +
                       to_decimal(young_only));
    }
}

void identities(Checks& checks, const VerifyOptions& opt) {
    bool ok = true;
    std::string detail;
    for (std::int64_t v = 0; v <= static_cast<std::int64_t>(kWeightedDyckCrossover); ++v) {
        if (weighted_dyck_sum_brute(v) != double_factorial(2 * v - 1)) {
            ok = false;
            detail += "v=" + std::to_string(v) + " ";
        }
    }
    checks.add("weighted Dyck sum = (2v-1)!! for v<=12 by path enumeration", ok, detail);

    ok = true;
    detail.clear();
    for (std::int64_t v = 0; v <= 200; ++v) {
        if (weighted_dyck_sum_dp(v) != double_factorial(2 * v - 1)) {
            ok = false;
            detail += "v=" + std::to_string(v) + " ";
        }
    }
    checks.add("weighted Dyck sum = (2v-1)!! for v<=200 by height DP", ok, detail);

    WalkCounter counter(opt.max_states);
    ok = true;
    detail.clear();
    for (std::int64_t n = 0; n <= 10; ++n) {
        if (counter.count_young_walks(2 * n) != double_factorial(2 * n - 1)) {
            ok = false;
            detail += "n=" + std::to_string(n) + " ";
        }
    }
    checks.add("closed Young's-lattice walks of length 2n = (2n-1)!! for n<=10", ok, detail);

    ok = true;
    detail.clear();
    for (std::uint64_t n = 0; n <= 10; ++n) {
        if (count_proper_dyck_paths(n) != catalan(n)) {
            ok = false;
            detail += "n=" + std::to_string(n) + " ";
        }
    }
    checks.add("proper Dyck paths of semilength n+1 = C_n for n<=10", ok, detail);

    ok = true;
    detail.clear();
    for (std::uint64_t n = 0; 2 * n + 2 <= 10; ++n) {
        if (tangent_numbers(n) != count_zigzag_permutations(2 * n + 2)) {
            ok = false;
            detail += "n=" + std::to_string(n) + " ";
        }
    }
    checks.add("Entringer zig-zag counts match permutation filtering for 2n+2<=10", ok, detail);

    ok = true;
    BigCount running = 1;
    for (std::int64_t m = 1; m <= 201; m += 2) {
        running *= m;
        ok = ok && double_factorial(m) == running;
    }
    checks.add("double factorial satisfies m!! = m (m-2)!! for m<=201", ok && double_factorial(-1) == 1);
}

void oracle(Checks& checks, const VerifyOptions& opt) {
    WalkCounter counter(opt.max_states);
    for (std::uint64_t n = 0; n <= opt.oracle_ceiling; ++n) {
        std::uint64_t enumerated = 0;
        enumerate_games(n, [&](const Game&) { ++enumerated; }, opt.oracle_ceiling);
        const auto dp = counter.count_games(n);
        checks.add("enumerated games = walk count for n=" + std::to_string(n), dp == enumerated,
                   "enumerated " + std::to_string(enumerated) + ", counted " + to_decimal(dp));
    }

    WalkCounter unpruned(opt.max_states);
    bool ok = true;
    for (std::uint64_t n = 0; n <= 8; ++n) {
        ok = ok && counter.count_games(n, true) == unpruned.count_games(n, false);
    }
    checks.add("weight pruning leaves counts unchanged for n<=8", ok);

    ok = true;
    for (std::uint64_t n = 0; n <= 12; ++n) {
        ok = ok && counter.count({Partition{}, Partition{}, 2 * n + 2, true, true, true}) ==
                       counter.count_games(n);
    }
    checks.add("first-return walks at the empty table = <1>-to-<1> walks for n<=12", ok);
}

void bounds(Checks& checks, const VerifyOptions& opt) {
    WalkCounter counter(opt.max_states);
    bool ok = true;
    std::string detail;
    for (const auto& row : bound_table(opt.bounds_max_n,
                                       [&](std::uint64_t n) { return counter.count_games(n); })) {
        if (!row.lower_bound_holds) {
            ok = false;
            detail += "n=" + std::to_string(row.n) + " ";
        }
    }
    checks.add("M_n >= (2n-1)!! for n<=" + std::to_string(opt.bounds_max_n), ok, detail);

    for (std::int64_t n = 0; n <= 5; ++n) {
        std::set<std::string> games;
        BigCount walks = 0;
        bool valid = true;
        enumerate_young_walks(2 * n, [&](std::span<const Partition> w) {
            ++walks;
            try {
                games.insert(to_string(lift_young_walk(w)));
            } catch (const std::exception&) {
                valid = false;
            }
        });
        const auto expected = double_factorial(2 * n - 1);
        checks.add("lifted Young's walks give (2n-1)!! distinct games for n=" + std::to_string(n),
                   valid && walks == expected && games.size() == expected,
                   std::to_string(games.size()) + " distinct of " + to_decimal(walks));
    }
}

void claims(Checks& checks, const VerifyOptions& opt) {
    std::uint64_t states = 0;
    std::uint64_t distinct_bad = 0;
    std::uint64_t caps_bad = 0;
    std::uint64_t simple_bad = 0;
    for_each_partition(opt.claims_max_weight, [&](const Partition& p) {
        ++states;
        const auto t = p.olive_count();
        distinct_bad += p.distinct_olive_counts() > w_cap(t);
        caps_bad += !move_capacity_profile(p).within_caps(t);
        std::set<Partition> seen;
        for (const auto& tr : legal_moves(p)) simple_bad += !seen.insert(tr.result).second;
    });
    const auto suffix = " for all " + std::to_string(states) + " partitions of weight <= " +
                        std::to_string(opt.claims_max_weight);
    checks.add("distinct olive counts <= w(t)" + suffix, distinct_bad == 0,
               std::to_string(distinct_bad) + " violations");
    checks.add("per-state move caps hold" + suffix, caps_bad == 0,
               std::to_string(caps_bad) + " violations");
    checks.add("distinct moves reach distinct states" + suffix, simple_bad == 0,
               std::to_string(simple_bad) + " collisions");

    std::uint64_t games = 0;
    std::uint64_t obs_bad = 0;
    std::uint64_t sum_bad = 0;
    std::uint64_t dyck_bad = 0;
    for (std::uint64_t n = 0; n <= opt.oracle_ceiling; ++n) {
        enumerate_games(
            n,
            [&](const Game& g) {
                ++games;
                const auto st = game_stats(g);
                obs_bad += st.complex_removes > st.first_olive_adds;
                sum_bad += st.olive_adds() + st.plate_removes() != n;
                const auto path = olive_dyck_path(g);
                dyck_bad += !path.is_valid() || path.semilength() != st.olive_adds();
            },
            opt.oracle_ceiling);
    }
    const auto game_suffix = " for all " + std::to_string(games) + " games with n <= " +
                             std::to_string(opt.oracle_ceiling);
    checks.add("p_c <= v_f" + game_suffix, obs_bad == 0, std::to_string(obs_bad) + " violations");
    checks.add("v + p = n" + game_suffix, sum_bad == 0, std::to_string(sum_bad) + " violations");
    checks.add("olive Dyck path is a Dyck path of semilength v" + game_suffix, dyck_bad == 0,
               std::to_string(dyck_bad) + " violations");
}

}  // namespace

std::string_view suite_name(Suite s) {
    switch (s) {
    case Suite::PaperValues: return "paper-values";
    case Suite::Identities: return "identities";
    case Suite::Oracle: return "oracle";
    case Suite::Bounds: return "bounds";
    case Suite::Claims: return "claims";
    case Suite::Erratum: return "erratum";
    }
    return "?";
}

std::vector<Suite> all_suites() {
    return {Suite::PaperValues, Suite::Identities, Suite::Oracle,
            Suite::Bounds,      Suite::Claims,     Suite::Erratum};
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (auto s : all_suites()) {
        if (suite_name(s) == name) return s;
    }
    return std::nullopt;
}

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options) {
    Checks checks;
    switch (suite) {
    case Suite::PaperValues: paper_values(checks, options); break;
    case Suite::Identities: identities(checks, options); break;
    case Suite::Oracle: oracle(checks, options); break;
    case Suite::Bounds: bounds(checks, options); break;
    case Suite::Claims: claims(checks, options); break;
    case Suite::Erratum: erratum(checks, options); break;
    }
    return checks.take();
}

}  // namespace olives

// Acceptance criteria, one PASS/FAIL line each. With no arguments every
// criterion runs; otherwise only the numbered ones given.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "olives/analysis.hpp"
#include "olives/counting.hpp"
#include "olives/game.hpp"

using namespace olives;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string timing(double elapsed, double limit) {
    std::ostringstream s;
    s.precision(3);
    s << std::fixed << elapsed << " s (limit " << limit << " s)";
    return s.str();
}

Outcome golden_sequence() {
    const auto start = Clock::now();
    WalkCounter counter;
    std::ostringstream got;
    bool ok = true;
    for (std::uint64_t n = 0; n < known::games.size(); ++n) {
        const auto c = counter.count_games(n);
        got << (n ? ", " : "") << c;
        ok = ok && c == known::games[n];
    }
    const double elapsed = seconds_since(start);
    return {ok && elapsed < 1.0, "M_0..M_4 = " + got.str() + " in " + timing(elapsed, 1)};
}

Outcome closed_walks() {
    WalkCounter counter;
    std::ostringstream with, without, expected;
    bool ok = true;
    bool alternate_ok = true;
    for (const auto& [n, value] : known::closed_walks) {
        const auto c = counter.count_closed_walks(n, true);
        const auto y = counter.count_closed_walks(n, false);
        ok = ok && c == value;
        alternate_ok = alternate_ok && y == value;
        const char* sep = n == known::closed_walks.front().first ? "" : ", ";
        with << sep << c;
        without << sep << y;
        expected << sep << value;
    }
    std::string detail = "n=2..4 expected " + expected.str() + "; with complex removes " +
                         with.str();
    if (!ok) {
        detail += "; alternate reading without complex removes " + without.str() +
                  (alternate_ok ? " (matches)" : " (no match)");
    }
    return {ok, detail};
}

Outcome ratio_at_18() {
    const auto start = Clock::now();
    const auto table = ratio_table(18);
    const double elapsed = seconds_since(start);
    bool decreasing = true;
    for (const auto& row : table) decreasing = decreasing && !row.breaks_decrease;
    const Real r = table.back().ratio;
    const bool close = abs(r - Real(known::ratio_at_18)) < Real("1e-5");
    return {close && decreasing && elapsed < 60.0,
            "r_18 = " + format_fixed(r, 10) + (decreasing ? ", strictly decreasing" : ", NOT decreasing") +
                " in " + timing(elapsed, 60)};
}

Outcome oracle_equivalence() {
    const auto start = Clock::now();
    WalkCounter counter;
    bool ok = true;
    std::ostringstream got;
    for (std::uint64_t n = 0; n <= 6; ++n) {
        std::uint64_t listed = 0;
        enumerate_games(n, [&](const Game&) { ++listed; });
        const auto counted = counter.count_games(n);
        ok = ok && counted == listed;
        got << (n ? ", " : "") << listed;
    }
    const double elapsed = seconds_since(start);
    return {ok && elapsed < 120.0, "enumerated " + got.str() + " in " + timing(elapsed, 120)};
}

Outcome lower_bound() {
    bool ok = true;
    std::ostringstream got;
    for (std::int64_t n = 0; n <= 5; ++n) {
        std::set<std::string> games;
        std::uint64_t walks = 0;
        enumerate_young_walks(2 * n, [&](std::span<const Partition> w) {
            ++walks;
            try {
                games.insert(to_string(lift_young_walk(w)));
            } catch (const std::exception&) {
                ok = false;
            }
        });
        ok = ok && games.size() == walks && double_factorial(2 * n - 1) == walks;
        got << (n ? ", " : "") << games.size();
    }
    std::uint64_t computed = 0;
    for (const auto& row : bound_table(18)) {
        ok = ok && row.lower_bound_holds;
        ++computed;
    }
    return {ok, "distinct lifted games " + got.str() + "; M_n >= (2n-1)!! for n=0.." +
                    std::to_string(computed - 1)};
}

Outcome identities() {
    bool ok = true;
    for (std::uint64_t v = 0; v <= 12; ++v) {
        ok = ok && weighted_dyck_sum_brute(v) == double_factorial(2 * std::int64_t(v) - 1);
    }
    for (std::uint64_t v = 0; v <= 200; ++v) {
        ok = ok && weighted_dyck_sum_dp(v) == double_factorial(2 * std::int64_t(v) - 1);
    }
    WalkCounter counter;
    for (std::int64_t n = 0; n <= 10; ++n) {
        ok = ok && counter.count_young_walks(2 * n) == double_factorial(2 * n - 1);
    }
    for (std::uint64_t n = 0; n <= 10; ++n) ok = ok && count_proper_dyck_paths(n) == catalan(n);
    for (std::uint64_t n = 0; 2 * n + 2 <= 8; ++n) {
        ok = ok && tangent_numbers(n) == count_zigzag_permutations(2 * n + 2);
    }
    for (std::uint64_t n = 0; n < known::zigzag.size(); ++n) {
        ok = ok && tangent_numbers(n) == known::zigzag[n];
    }
    return {ok, "Dyck sums v<=12 and v<=200, Young walks n<=10, Catalan n<=10, zig-zag"};
}

Outcome invariants() {
    std::uint64_t states = 0;
    std::uint64_t bad = 0;
    for_each_partition(20, [&](const Partition& p) {
        ++states;
        const auto t = p.olive_count();
        bad += p.distinct_olive_counts() > w_cap(t);
        bad += !move_capacity_profile(p).within_caps(t);
    });
    std::uint64_t games = 0;
    for (std::uint64_t n = 0; n <= 6; ++n) {
        enumerate_games(n, [&](const Game& g) {
            ++games;
            const auto st = game_stats(g);
            bad += st.complex_removes > st.first_olive_adds;
            bad += st.olive_adds() + st.plate_removes() != n;
            bad += !olive_dyck_path(g).is_valid();
        });
    }
    return {bad == 0, std::to_string(states) + " partitions, " + std::to_string(games) +
                          " games, " + std::to_string(bad) + " violations"};
}

Outcome asymptotics_informational() {
    // Envelopes are printed for comparison only; nothing is asserted about them.
    const auto table = bound_table(18);
    bool ok = table.size() == 19;
    for (const auto& row : table) ok = ok && row.lower_envelope <= row.upper_envelope;
    return {ok, "bound table n=0..18 produced; envelope columns are informational, not asserted"};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "golden sequence 1, 2, 10, 76, 772", golden_sequence},
        {2, "closed walks 15, 107, 981 with complex removes", closed_walks},
        {3, "(1/18) M_18^(1/18) = 1.09206 +- 1e-5 and decreasing", ratio_at_18},
        {4, "enumeration equals walk count for n <= 6", oracle_equivalence},
        {5, "constructive double-factorial lower bound", lower_bound},
        {6, "identity suite", identities},
        {7, "state-space invariants", invariants},
        {8, "asymptotic envelopes reported, not asserted", asymptotics_informational},
    };

    std::set<int> selected;
    for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
                  << " | " << o.detail << '\n';
    }
    return failures ? EXIT_FAILURE : EXIT_SUCCESS;
}

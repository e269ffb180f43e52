#include "olives/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <memory>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "olives/analysis.hpp"
#include "olives/cache.hpp"
#include "olives/errors.hpp"
#include "olives/verify.hpp"

namespace olives {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommonOptions {
    std::string format = "table";
    std::string cache_path;
    bool no_cache = false;
    std::size_t max_states = kDefaultMaxStates;
    std::uint64_t oracle_ceiling = kDefaultOracleCeiling;
};

std::optional<std::filesystem::path> resolve_cache_path(const CommonOptions& opt) {
    if (opt.no_cache) return std::nullopt;
    if (!opt.cache_path.empty()) return std::filesystem::path(opt.cache_path);
    if (const char* env = std::getenv("OLIVE_CACHE"); env && *env) return std::filesystem::path(env);
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "plates-olives" / "counts.json";
    }
    return std::nullopt;
}

// Counts backed by the optional cache. Misses are computed and written back
// on flush().
class CountSource {
public:
    CountSource(const CommonOptions& opt) : counter_(opt.max_states) {
        if (auto path = resolve_cache_path(opt)) cache_ = std::make_unique<CountCache>(*path);
    }

    BigCount get(Variant v, std::uint64_t n) {
        if (cache_) {
            if (auto hit = cache_->get(v, n)) return *hit;
        }
        auto value = compute_variant(counter_, v, n);
        if (cache_) cache_->put(v, n, value);
        return value;
    }

    bool cached(Variant v, std::uint64_t n) const { return cache_ && cache_->get(v, n); }
    BigCount recompute(Variant v, std::uint64_t n) { return compute_variant(counter_, v, n); }

    void flush() {
        if (cache_) cache_->save();
    }

private:
    WalkCounter counter_;
    std::unique_ptr<CountCache> cache_;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void print_table(std::ostream& out) const {
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string text;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c) text += "  ";
                text += std::string(width[c] - cells[c].size(), ' ') + cells[c];
            }
            out << text << '\n';
        };
        line(header);
        for (const auto& row : rows) line(row);
    }

    void print_csv(std::ostream& out) const {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_field(cells[c]);
            out << '\n';
        };
        line(header);
        for (const auto& row : rows) line(row);
    }
};

int cmd_count(const CommonOptions& opt, std::uint64_t max_n, const std::string& variant_text,
              bool verify_cache, std::ostream& out, std::ostream& err) {
    const Variant variant = *parse_variant(variant_text);
    CountSource source(opt);
    std::vector<BigCount> counts;
    int status = kExitOk;
    try {
        for (std::uint64_t n = 0; n <= max_n; ++n) {
            const bool hit = source.cached(variant, n);
            counts.push_back(source.get(variant, n));
            if (verify_cache && hit) {
                const auto fresh = source.recompute(variant, n);
                if (fresh != counts.back()) {
                    err << "cache mismatch for " << variant_text << " n=" << n << ": cached "
                        << to_decimal(counts.back()) << ", recomputed " << to_decimal(fresh) << '\n';
                    status = kExitCheckFailed;
                }
            }
        }
    } catch (...) {
        source.flush();
        throw;
    }
    source.flush();

    if (opt.format == "json") {
        for (std::uint64_t n = 0; n < counts.size(); ++n) {
            ordered_json rec;
            rec["n"] = n;
            rec["count"] = to_decimal(counts[n]);
            rec["variant"] = variant_text;
            out << rec.dump() << '\n';
        }
        return status;
    }
    Table t{{"n", "count"}, {}};
    for (std::uint64_t n = 0; n < counts.size(); ++n) {
        t.rows.push_back({std::to_string(n), to_decimal(counts[n])});
    }
    opt.format == "csv" ? t.print_csv(out) : t.print_table(out);
    return status;
}

int cmd_enumerate(const CommonOptions& opt, std::uint64_t n, const std::string& emit,
                  std::ostream& out) {
    if (emit == "games") {
        enumerate_games(n, [&](const Game& g) { out << to_string(g) << '\n'; }, opt.oracle_ceiling);
    } else if (emit == "skeletons") {
        std::set<std::string> seen;
        enumerate_games(
            n,
            [&](const Game& g) {
                auto text = to_string(skeleton(g));
                if (seen.insert(text).second) out << text << '\n';
            },
            opt.oracle_ceiling);
    } else {
        const auto hist = stats_histogram(n, opt.oracle_ceiling);
        if (opt.format == "json") {
            for (const auto& [st, count] : hist) {
                ordered_json rec;
                rec["v_f"] = st.first_olive_adds;
                rec["v_l"] = st.later_olive_adds;
                rec["p_s"] = st.simple_removes;
                rec["p_c"] = st.complex_removes;
                rec["count"] = count;
                out << rec.dump() << '\n';
            }
        } else {
            out << histogram_csv(hist);
        }
    }
    return kExitOk;
}

int cmd_verify(const CommonOptions& opt, const std::string& suite_text, std::ostream& out) {
    std::vector<Suite> suites;
    if (suite_text == "all") {
        for (auto s : all_suites()) {
            if (s != Suite::Erratum) suites.push_back(s);
        }
    } else {
        suites.push_back(*parse_suite(suite_text));
    }
    VerifyOptions vopt;
    vopt.oracle_ceiling = opt.oracle_ceiling;
    vopt.max_states = opt.max_states;

    std::size_t total = 0;
    std::size_t failed = 0;
    Table t{{"suite", "check", "result", "detail"}, {}};
    for (auto s : suites) {
        for (const auto& r : run_suite(s, vopt)) {
            ++total;
            failed += !r.passed;
            const std::string name(suite_name(s));
            if (opt.format == "json") {
                ordered_json rec;
                rec["suite"] = name;
                rec["check"] = r.name;
                rec["passed"] = r.passed;
                rec["detail"] = r.detail;
                out << rec.dump() << '\n';
            } else if (opt.format == "csv") {
                t.rows.push_back({name, r.name, r.passed ? "pass" : "fail", r.detail});
            } else {
                out << (r.passed ? "PASS " : "FAIL ") << name << ": " << r.name;
                if (!r.detail.empty() && !r.passed) out << " (" << r.detail << ')';
                out << '\n';
            }
        }
    }
    if (opt.format == "csv") t.print_csv(out);
    if (opt.format == "table") out << (total - failed) << '/' << total << " checks passed\n";
    return failed ? kExitCheckFailed : kExitOk;
}

int cmd_ratio(const CommonOptions& opt, std::uint64_t max_n, int precision, std::ostream& out) {
    CountSource source(opt);
    std::vector<RatioReport> table;
    try {
        table = ratio_table(max_n, [&](std::uint64_t n) { return source.get(Variant::FirstReturn, n); });
    } catch (...) {
        source.flush();
        throw;
    }
    source.flush();

    if (opt.format == "json") {
        for (const auto& row : table) {
            ordered_json rec;
            rec["n"] = row.n;
            rec["count"] = to_decimal(row.count);
            rec["ratio"] = format_fixed(row.ratio, precision);
            rec["breaks_decrease"] = row.breaks_decrease;
            out << rec.dump() << '\n';
        }
        return kExitOk;
    }
    Table t{{"n", "count", "ratio", "breaks_decrease"}, {}};
    for (const auto& row : table) {
        t.rows.push_back({std::to_string(row.n), to_decimal(row.count),
                          format_fixed(row.ratio, precision), row.breaks_decrease ? "yes" : "no"});
    }
    if (opt.format == "csv") {
        t.print_csv(out);
        return kExitOk;
    }
    t.print_table(out);
    out << "envelope (not a theorem at finite n): 2/e = " << format_fixed(lower_envelope(), precision)
        << ", 4/e = " << format_fixed(upper_envelope(), precision) << '\n';
    return kExitOk;
}

int cmd_bounds(const CommonOptions& opt, std::uint64_t max_n, std::ostream& out) {
    CountSource source(opt);
    std::vector<BoundReport> table;
    try {
        table = bound_table(max_n, [&](std::uint64_t n) { return source.get(Variant::FirstReturn, n); });
    } catch (...) {
        source.flush();
        throw;
    }
    source.flush();

    bool holds = true;
    Table t{{"n", "count", "double_factorial", "lower_envelope", "upper_envelope", "crude_bound",
             "lower_bound_holds"},
            {}};
    for (const auto& row : table) {
        holds = holds && row.lower_bound_holds;
        if (opt.format == "json") {
            ordered_json rec;
            rec["n"] = row.n;
            rec["count"] = to_decimal(row.count);
            rec["double_factorial"] = to_decimal(row.double_factorial);
            rec["lower_envelope"] = format_scientific(row.lower_envelope, 6);
            rec["upper_envelope"] = format_scientific(row.upper_envelope, 6);
            rec["crude_bound"] = format_scientific(row.crude_bound, 6);
            rec["lower_bound_holds"] = row.lower_bound_holds;
            out << rec.dump() << '\n';
            continue;
        }
        t.rows.push_back({std::to_string(row.n), to_decimal(row.count),
                          to_decimal(row.double_factorial), format_scientific(row.lower_envelope, 6),
                          format_scientific(row.upper_envelope, 6),
                          format_scientific(row.crude_bound, 6), row.lower_bound_holds ? "yes" : "no"});
    }
    if (opt.format == "csv") t.print_csv(out);
    if (opt.format == "table") {
        t.print_table(out);
        out << "envelope (not a theorem at finite n): columns drop the o(n) corrections\n";
    }
    return holds ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count and verify plates-and-olives games.", "olives"};
    app.fallthrough();
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--cache", common.cache_path, "Count cache file");
    app.add_flag("--no-cache", common.no_cache, "Do not read or write the count cache");
    app.add_option("--max-states", common.max_states, "Interned state limit")
        ->check(CLI::PositiveNumber);
    app.add_option("--oracle-ceiling", common.oracle_ceiling, "Largest n for explicit enumeration");

    std::uint64_t count_max_n = 0;
    std::string variant = "first-return";
    bool verify_cache = false;
    auto* count = app.add_subcommand("count", "Exact counts for n = 0..max-n");
    count->add_option("--max-n", count_max_n, "Largest n")->required();
    count->add_option("--variant", variant, "Walk family")
        ->check(CLI::IsMember({"first-return", "closed", "young"}));
    count->add_flag("--verify-cache", verify_cache, "Recompute cache hits and compare");

    std::uint64_t enum_n = 0;
    std::string emit = "games";
    auto* enumerate = app.add_subcommand("enumerate", "List games of length n");
    enumerate->add_option("--n", enum_n, "Game length")->required();
    enumerate->add_option("--emit", emit, "What to print")
        ->check(CLI::IsMember({"games", "skeletons", "histogram"}));

    std::vector<std::string> suite_names{"all"};
    for (auto s : all_suites()) suite_names.emplace_back(suite_name(s));
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run self-check suites");
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names));

    std::uint64_t ratio_max_n = 18;
    int precision = 6;
    auto* ratio = app.add_subcommand("ratio", "Normalised n-th roots (1/n) M_n^(1/n)");
    ratio->add_option("--max-n", ratio_max_n, "Largest n");
    ratio->add_option("--precision", precision, "Decimal places")->check(CLI::Range(0, 40));

    std::uint64_t bounds_max_n = 18;
    auto* bounds = app.add_subcommand("bounds", "M_n against (2n-1)!! and the envelopes");
    bounds->add_option("--max-n", bounds_max_n, "Largest n");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(common, count_max_n, variant, verify_cache, out, err);
        if (enumerate->parsed()) return cmd_enumerate(common, enum_n, emit, out);
        if (verify->parsed()) return cmd_verify(common, suite, out);
        if (ratio->parsed()) return cmd_ratio(common, ratio_max_n, precision, out);
        if (bounds->parsed()) return cmd_bounds(common, bounds_max_n, out);
    } catch (const CeilingExceeded& e) {
        err << "olives: " << e.what() << " (raise --oracle-ceiling to allow it)\n";
        return kExitResource;
    } catch (const ResourceLimit& e) {
        err << "olives: " << e.what() << " (raise --max-states to allow it)\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "olives: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace olives

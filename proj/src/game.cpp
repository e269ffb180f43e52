#include "olives/game.hpp"

#include <algorithm>
#include <sstream>

#include "olives/errors.hpp"

namespace olives {

struct GameBuilder {
    static Game make(std::vector<Move> moves, std::vector<Partition> trace) {
        Game g;
        g.moves_ = std::move(moves);
        g.trace_ = std::move(trace);
        return g;
    }
};

Game validate_game(std::span<const Move> moves) {
    if (moves.empty()) throw NotClosed("a game needs at least one move");
    std::vector<Partition> trace;
    trace.reserve(moves.size() + 1);
    trace.emplace_back();
    for (std::size_t k = 0; k < moves.size(); ++k) {
        try {
            trace.push_back(apply_move(trace.back(), moves[k]));
        } catch (const IllegalMove& e) {
            throw IllegalMove("step " + std::to_string(k + 1) + ": " + e.what());
        }
        if (trace.back().empty() && k + 1 != moves.size()) {
            throw PrematureEmpty("table empty after step " + std::to_string(k + 1) + " of " +
                                 std::to_string(moves.size()));
        }
    }
    if (!trace.back().empty()) {
        throw NotClosed("game ends at " + to_string(trace.back()) + ", not the empty table");
    }
    Game g;
    g.moves_.assign(moves.begin(), moves.end());
    g.trace_ = std::move(trace);
    return g;
}

std::vector<Move> parse_moves(std::string_view line) {
    std::vector<Move> moves;
    std::size_t pos = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (pos < line.size()) {
        while (pos < line.size() && is_space(line[pos])) ++pos;
        std::size_t end = pos;
        while (end < line.size() && !is_space(line[end])) ++end;
        if (end > pos) moves.push_back(parse_move(line.substr(pos, end - pos)));
        pos = end;
    }
    return moves;
}

Game parse_game(std::string_view line) {
    return validate_game(parse_moves(line));
}

std::string to_string(const Game& g) {
    std::string out;
    for (const auto& m : g.moves()) {
        if (!out.empty()) out += ' ';
        out += to_string(m);
    }
    return out;
}

namespace {

struct Enumerator {
    std::uint64_t total_moves;
    const std::function<void(const Game&)>& visit;
    std::vector<Move> moves;
    std::vector<Partition> trace;

    void run() {
        const Partition& here = trace.back();
        const std::uint64_t taken = moves.size();
        if (taken == total_moves) {
            if (here.empty()) visit(GameBuilder::make(moves, trace));
            return;
        }

        auto options = legal_moves(here);
        std::vector<std::pair<std::string, std::size_t>> order;
        order.reserve(options.size());
        for (std::size_t k = 0; k < options.size(); ++k) {
            order.emplace_back(to_string(options[k].move), k);
        }
        std::sort(order.begin(), order.end());

        const std::uint64_t left_after = total_moves - taken - 1;
        for (const auto& [token, k] : order) {
            const Partition& next = options[k].result;
            const auto w = next.weight();
            // Weight drops by at most one per move, and the table may only be
            // empty after the last one.
            if (w > left_after) continue;
            if (w == 0 && left_after != 0) continue;
            moves.push_back(options[k].move);
            trace.push_back(next);
            run();
            trace.pop_back();
            moves.pop_back();
        }
    }
};

}  // namespace

void enumerate_games(std::uint64_t n, const std::function<void(const Game&)>& visit,
                     std::uint64_t ceiling) {
    if (n > ceiling) {
        throw CeilingExceeded("enumeration of length " + std::to_string(n) +
                              " exceeds the oracle ceiling " + std::to_string(ceiling));
    }
    Enumerator e{2 * n + 2, visit, {}, {Partition{}}};
    e.moves.reserve(e.total_moves);
    e.trace.reserve(e.total_moves + 1);
    e.run();
}

std::vector<Game> collect_games(std::uint64_t n, std::uint64_t ceiling) {
    std::vector<Game> out;
    enumerate_games(n, [&](const Game& g) { out.push_back(g); }, ceiling);
    return out;
}

Skeleton skeleton(const Game& g) {
    Skeleton s;
    s.reserve(g.moves().size());
    for (const auto& m : g.moves()) {
        switch (m.kind) {
        case MoveKind::PlateAdd: s.push_back(SkeletonLabel::PlateAdd); break;
        case MoveKind::OliveAddFirst: s.push_back(SkeletonLabel::OliveAddFirst); break;
        case MoveKind::OliveAddLater: s.push_back(SkeletonLabel::OliveAddLater); break;
        case MoveKind::OliveRemove: s.push_back(SkeletonLabel::OliveRemove); break;
        case MoveKind::PlateRemoveSimple: s.push_back(SkeletonLabel::PlateRemoveSimple); break;
        case MoveKind::PlateRemoveComplex: s.push_back(SkeletonLabel::PlateRemoveComplex); break;
        }
    }
    return s;
}

std::string_view label_text(SkeletonLabel label) {
    switch (label) {
    case SkeletonLabel::PlateAdd: return "P+";
    case SkeletonLabel::OliveAddFirst: return "O+f";
    case SkeletonLabel::OliveAddLater: return "O+l";
    case SkeletonLabel::PlateRemoveSimple: return "P-s";
    case SkeletonLabel::PlateRemoveComplex: return "P-c";
    case SkeletonLabel::OliveRemove: return "O-";
    }
    return "?";
}

std::string to_string(const Skeleton& s) {
    std::string out;
    for (auto label : s) {
        if (!out.empty()) out += ' ';
        out += label_text(label);
    }
    return out;
}

GameStats game_stats(const Game& g) {
    GameStats st;
    const auto& moves = g.moves();
    // The opening plate add and the closing simple remove are not counted.
    for (std::size_t k = 1; k + 1 < moves.size(); ++k) {
        switch (moves[k].kind) {
        case MoveKind::OliveAddFirst: ++st.first_olive_adds; break;
        case MoveKind::OliveAddLater: ++st.later_olive_adds; break;
        case MoveKind::PlateRemoveSimple: ++st.simple_removes; break;
        case MoveKind::PlateRemoveComplex: ++st.complex_removes; break;
        default: break;
        }
    }
    return st;
}

std::vector<std::uint64_t> DyckPath::heights() const {
    std::vector<std::uint64_t> out;
    out.reserve(steps.size());
    std::uint64_t h = 0;
    for (auto s : steps) {
        if (s == DyckStep::Up) {
            out.push_back(h++);
        } else {
            out.push_back(--h);
        }
    }
    return out;
}

bool DyckPath::is_valid() const {
    std::int64_t h = 0;
    for (auto s : steps) {
        h += (s == DyckStep::Up) ? 1 : -1;
        if (h < 0) return false;
    }
    return h == 0;
}

DyckPath olive_dyck_path(const Game& g) {
    DyckPath path;
    for (const auto& m : g.moves()) {
        if (m.kind == MoveKind::OliveAddFirst || m.kind == MoveKind::OliveAddLater) {
            path.steps.push_back(DyckStep::Up);
        } else if (m.kind == MoveKind::OliveRemove) {
            path.steps.push_back(DyckStep::Down);
        }
    }
    return path;
}

StatsHistogram stats_histogram(std::uint64_t n, std::uint64_t ceiling) {
    StatsHistogram h;
    enumerate_games(n, [&](const Game& g) { ++h[game_stats(g)]; }, ceiling);
    return h;
}

std::string histogram_csv(const StatsHistogram& h) {
    std::ostringstream os;
    os << "v_f,v_l,p_s,p_c,count\n";
    for (const auto& [st, count] : h) {
        os << st.first_olive_adds << ',' << st.later_olive_adds << ',' << st.simple_removes << ','
           << st.complex_removes << ',' << count << '\n';
    }
    return os.str();
}

}  // namespace olives

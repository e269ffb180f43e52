#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "olives/errors.hpp"
#include "olives/partition.hpp"

using namespace olives;

namespace {

// Physical model: a table of distinguishable plates given by olive counts.
// Every action is tried on every plate (or pair of plates) and the results
// are canonicalised; the distinct outcomes are what the move grammar names.
std::set<Partition> physical_successors(const Partition& p, bool allow_complex) {
    std::vector<std::uint32_t> olives;
    for (auto x : p.parts()) olives.push_back(x - 1);
    auto canon = [](std::vector<std::uint32_t> table) {
        std::vector<Partition::Part> parts;
        for (auto o : table) parts.push_back(o + 1);
        return Partition(std::move(parts));
    };
    std::set<Partition> out;
    auto add_plate = olives;
    add_plate.push_back(0);
    out.insert(canon(add_plate));
    for (std::size_t a = 0; a < olives.size(); ++a) {
        auto t = olives;
        ++t[a];
        out.insert(canon(t));
        if (olives[a] > 0) {
            t = olives;
            --t[a];
            out.insert(canon(t));
        } else {
            t = olives;
            t.erase(t.begin() + static_cast<long>(a));
            out.insert(canon(t));
        }
        if (!allow_complex) continue;
        for (std::size_t b = 0; b < olives.size(); ++b) {
            if (a == b || olives[a] == 0 || olives[b] == 0) continue;
            t = olives;
            t[a] += t[b];
            t.erase(t.begin() + static_cast<long>(b));
            out.insert(canon(t));
        }
    }
    return out;
}

std::vector<Partition> all_partitions(std::uint64_t max_weight) {
    std::vector<Partition> out;
    for_each_partition(max_weight, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<std::string> move_texts(const std::vector<Transition>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(to_string(t.move) + "->" + to_string(t.result));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("w_cap on small values") {
    CHECK(w_cap(0) == 1);
    CHECK(w_cap(1) == 2);
    CHECK(w_cap(2) == 2);
    CHECK(w_cap(3) == 3);
    CHECK(w_cap(6) == 4);
    CHECK(w_cap(9) == 4);
    CHECK(w_cap(10) == 5);
}

TEST_CASE("w_cap brackets t between consecutive triangular numbers") {
    std::uint64_t prev = 1;
    for (std::uint64_t t = 0; t <= 1'000'000; ++t) {
        const auto w = w_cap(t);
        REQUIRE(w >= prev);
        REQUIRE(w * (w - 1) / 2 <= t);
        REQUIRE(t < (w + 1) * w / 2);
        if (t >= 10) {
            REQUIRE(w <= static_cast<std::uint64_t>(std::ceil(std::sqrt(3.0 * double(t)))));
        }
        prev = w;
    }
    // Far outside the tested range the 128-bit guard keeps the result exact.
    const std::uint64_t big = 4'000'000'000ULL;
    const auto wb = w_cap(big * (big - 1) / 2);
    CHECK(wb == big);
    CHECK(w_cap(big * (big - 1) / 2 - 1) == big - 1);
}

TEST_CASE("partition accessors") {
    const Partition p{1, 3, 2, 3};
    CHECK(to_string(p) == "<3,3,2,1>");
    CHECK(p.plate_count() == 4);
    CHECK(p.olive_count() == 5);
    CHECK(p.weight() == 9);
    CHECK(p.plates_with(2) == 2);
    CHECK(p.plates_with(0) == 1);
    CHECK(p.plates_with(7) == 0);
    CHECK(p.distinct_olive_counts() == 3);
    CHECK(p.occupancy() == std::map<std::uint64_t, std::size_t>{{0, 1}, {1, 1}, {2, 2}});
    CHECK(Partition{}.empty());
    CHECK(Partition{}.weight() == 0);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("partition and move text") {
    CHECK(parse_partition("<3,2,1>") == Partition{3, 2, 1});
    CHECK(parse_partition("<>") == Partition{});
    for (const char* bad : {"", "<", "3,2", "<3,,2>", "<3,>", "<0>", "<1,2>", "<03>", "< 3>"}) {
        CHECK_THROWS_AS(parse_partition(bad), ParseError);
    }
    CHECK(parse_move("P+") == Move::plate_add());
    CHECK(parse_move("O+f") == Move::olive_add_first());
    CHECK(parse_move("O+l:3") == Move::olive_add_later(3));
    CHECK(parse_move("O-:1") == Move::olive_remove(1));
    CHECK(parse_move("P-s") == Move::plate_remove_simple());
    CHECK(parse_move("P-c:1,2") == Move::plate_remove_complex(2, 1));
    CHECK(to_string(Move::plate_remove_complex(5, 2)) == "P-c:2,5");
    for (const char* bad : {"", "P", "O+", "O+l:", "O+l:0", "O+l:01", "O-:x", "P-c:2,1",
                            "P-c:1", "P-c:0,1", "p+", "P+ ", "O+l:1,2"}) {
        CHECK_THROWS_AS(parse_move(bad), ParseError);
    }
}

TEST_CASE("text forms round-trip byte for byte") {
    for (const auto& p : all_partitions(12)) {
        const auto text = to_string(p);
        REQUIRE(to_string(parse_partition(text)) == text);
        for (const auto& t : legal_moves(p)) {
            const auto mt = to_string(t.move);
            REQUIRE(to_string(parse_move(mt)) == mt);
        }
    }
}

TEST_CASE("legal moves from <1>") {
    CHECK(move_texts(legal_moves(Partition{1})) ==
          std::vector<std::string>{"O+f-><2>", "P+-><1,1>", "P-s-><>"});
}

TEST_CASE("legal moves from <2,2>") {
    CHECK(move_texts(legal_moves(Partition{2, 2})) ==
          std::vector<std::string>{"O+l:1-><3,2>", "O-:1-><2,1>", "P+-><2,2,1>",
                                   "P-c:1,1-><3>"});
}

TEST_CASE("legal moves from the empty table") {
    CHECK(move_texts(legal_moves(Partition{})) == std::vector<std::string>{"P+-><1>"});
}

TEST_CASE("young's lattice restriction drops only complex removes") {
    const Partition p{3, 2, 2, 1};
    const auto full = legal_moves(p, true);
    const auto young = legal_moves(p, false);
    std::size_t complex = 0;
    for (const auto& t : full) complex += t.move.kind == MoveKind::PlateRemoveComplex;
    CHECK(complex == 2);  // {1,1} and {1,2}; {2,2} needs two plates with 2 olives
    CHECK(young.size() + complex == full.size());
    for (const auto& t : young) CHECK(t.move.kind != MoveKind::PlateRemoveComplex);
}

TEST_CASE("apply_move") {
    CHECK(apply_move(Partition{2, 1}, Move::olive_add_first()) == Partition{2, 2});
    CHECK(apply_move(Partition{3, 2}, Move::plate_remove_complex(2, 1)) == Partition{4});
    CHECK(apply_move(Partition{1}, Move::plate_remove_simple()) == Partition{});
    CHECK(apply_move(Partition{3, 3}, Move::plate_remove_complex(2, 2)) == Partition{5});
    CHECK(apply_move(Partition{2}, Move::olive_remove(1)) == Partition{1});

    CHECK_THROWS_AS(apply_move(Partition{}, Move::olive_add_first()), IllegalMove);
    CHECK_THROWS_AS(apply_move(Partition{2}, Move::plate_remove_simple()), IllegalMove);
    CHECK_THROWS_AS(apply_move(Partition{3}, Move::plate_remove_complex(2, 2)), IllegalMove);
    CHECK_THROWS_AS(apply_move(Partition{2, 1}, Move::plate_remove_complex(1, 0)), IllegalMove);
    CHECK_THROWS_AS(apply_move(Partition{2, 1}, Move::olive_remove(2)), IllegalMove);
    CHECK_THROWS_AS(apply_move(Partition{2, 1}, Move::olive_add_later(0)), IllegalMove);
}

TEST_CASE("find_move") {
    CHECK(find_move(Partition{2, 1}, Partition{2, 2}) == Move::olive_add_first());
    CHECK(find_move(Partition{3, 2}, Partition{4}) == Move::plate_remove_complex(1, 2));
    CHECK_FALSE(find_move(Partition{3, 2}, Partition{4}, false).has_value());
    CHECK_FALSE(find_move(Partition{3, 2}, Partition{3, 2}).has_value());
    CHECK_FALSE(find_move(Partition{1}, Partition{3}).has_value());
}

TEST_CASE("move capacity profiles") {
    auto prof = move_capacity_profile(Partition{2, 2});
    CHECK(prof == MoveCapacityProfile{1, 0, 1, 1, 0, 1});
    CHECK(prof.within_caps(2));

    CHECK(move_capacity_profile(Partition{}) == MoveCapacityProfile{1, 0, 0, 0, 0, 0});

    prof = move_capacity_profile(Partition{3, 2, 1});
    CHECK(prof == MoveCapacityProfile{1, 1, 2, 2, 1, 1});
    CHECK(w_cap(3) == 3);
    CHECK(prof.within_caps(3));
}

TEST_CASE("exhaustive state-space properties up to weight 20") {
    std::size_t seen = 0;
    for_each_partition(20, [&](const Partition& p) {
        ++seen;
        const auto t = p.olive_count();
        REQUIRE(p.weight() == p.plate_count() + t);
        REQUIRE(std::is_sorted(p.parts().begin(), p.parts().end(), std::greater<>()));
        REQUIRE(p.distinct_olive_counts() <= w_cap(t));
        REQUIRE(move_capacity_profile(p).within_caps(t));

        const auto moves = legal_moves(p);
        std::set<Partition> results;
        for (const auto& tr : moves) {
            REQUIRE(results.insert(tr.result).second);
            REQUIRE(apply_move(p, tr.move) == tr.result);
            REQUIRE(is_legal(p, tr.move));
            REQUIRE(tr.result.weight() == p.weight() + tr.move.weight_delta());
        }
    });
    CHECK(seen == 2714);  // sum of p(0..20)
}

TEST_CASE("legal moves match the physical plate model") {
    for (const auto& p : all_partitions(12)) {
        for (bool complex : {true, false}) {
            std::set<Partition> ours;
            for (const auto& t : legal_moves(p, complex)) ours.insert(t.result);
            REQUIRE(ours == physical_successors(p, complex));
        }
    }
}

TEST_CASE("interner") {
    PartitionInterner interner(4, 6);
    const auto a = interner.intern(Partition{2, 1});
    const auto b = interner.intern(Partition{1});
    CHECK(a != b);
    CHECK(interner.intern(Partition{2, 1}) == a);
    CHECK(interner.at(a) == Partition{2, 1});
    CHECK(interner.find(Partition{1}) == b);
    CHECK_FALSE(interner.find(Partition{3}).has_value());
    CHECK_THROWS_AS(interner.intern(Partition{3, 2}), std::out_of_range);
    interner.raise_max_weight(5);
    CHECK_NOTHROW(interner.intern(Partition{3, 2}));
    CHECK(interner.size() == 3);
    interner.intern(Partition{});
    interner.intern(Partition{4});
    interner.intern(Partition{3});
    CHECK_THROWS_AS(interner.intern(Partition{2}), ResourceLimit);
    CHECK(interner.size() == 6);
}

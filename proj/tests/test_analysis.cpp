#include <doctest.h>

#include <cmath>

#include "olives/analysis.hpp"

using namespace olives;

TEST_CASE("nth root ratio on small inputs") {
    CHECK(nth_root_ratio(1, 1) == Real(1));
    CHECK(nth_root_ratio(2, 1) == Real(2));
    CHECK(std::abs(nth_root_ratio(10, 2).convert_to<double>() - std::sqrt(10.0) / 2) < 1e-15);
    CHECK_THROWS_AS(nth_root_ratio(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(nth_root_ratio(0, 3), std::invalid_argument);
}

TEST_CASE("nth root ratio matches floating evaluation below 2^53") {
    std::uint64_t x = 1;
    for (int step = 0; step < 2000; ++step) {
        x = (x * 6364136223846793005ULL + 1442695040888963407ULL) % (1ULL << 53);
        const std::uint64_t value = x == 0 ? 1 : x;
        for (std::uint64_t n : {1u, 2u, 3u, 7u, 18u, 40u}) {
            const double direct = std::pow(double(value), 1.0 / double(n)) / double(n);
            const double ours = nth_root_ratio(value, n).convert_to<double>();
            REQUIRE(std::abs(ours - direct) < 1e-6);
        }
    }
}

TEST_CASE("nth root ratio of huge integers stays exact in the leading digits") {
    // 10^200 = (10^10)^20, so the ratio is 10^10 / 20.
    BigCount big = 1;
    for (int k = 0; k < 200; ++k) big *= 10;
    const Real r = nth_root_ratio(big, 20);
    CHECK(abs(r - Real(500'000'000)) < Real("1e-30"));

    // 3^300 with n = 100 gives 27 / 100.
    BigCount p = 1;
    for (int k = 0; k < 300; ++k) p *= 3;
    CHECK(abs(nth_root_ratio(p, 100) - Real("0.27")) < Real("1e-35"));
}

TEST_CASE("ratio table through n = 18") {
    const auto table = ratio_table(18);
    REQUIRE(table.size() == 18);
    CHECK(table[0].ratio == Real(2));
    CHECK(format_fixed(table[0].ratio, 6) == "2.000000");
    CHECK(format_fixed(table[1].ratio, 6) == "1.581139");
    CHECK(abs(table[17].ratio - Real("1.09206")) < Real("1e-5"));
    for (const auto& row : table) CHECK_FALSE(row.breaks_decrease);
    CHECK(table[17].ratio < upper_envelope());
    CHECK(table[17].ratio > lower_envelope());
}

TEST_CASE("ratio table flags increases") {
    const auto table = ratio_table(3, [](std::uint64_t n) {
        return n == 2 ? BigCount(100) : BigCount(1);
    });
    CHECK_FALSE(table[0].breaks_decrease);
    CHECK(table[1].breaks_decrease);
    CHECK_FALSE(table[2].breaks_decrease);
}

TEST_CASE("bound table") {
    const auto table = bound_table(10);
    REQUIRE(table.size() == 11);
    CHECK(table[0].double_factorial == 1);
    CHECK(table[1].count == 2);
    CHECK(table[1].double_factorial == 1);
    CHECK(table[4].count == 772);
    CHECK(table[4].double_factorial == 105);
    CHECK(table[10].double_factorial == 654729075);
    for (const auto& row : table) {
        CHECK(row.lower_bound_holds);
        CHECK(row.lower_envelope <= row.upper_envelope);
    }
    CHECK(abs(table[2].crude_bound - Real(46656)) < Real("1e-30"));  // 108^2 * 2^2

    const auto fake = bound_table(2, [](std::uint64_t) { return BigCount(1); });
    CHECK(fake[1].lower_bound_holds);
    CHECK_FALSE(fake[2].lower_bound_holds);  // 3!! = 3 > 1
}

TEST_CASE("formatting") {
    CHECK(format_fixed(Real("1.0920562760576962"), 6) == "1.092056");
    CHECK(format_scientific(Real(46656), 3) == "4.666e+04");
}

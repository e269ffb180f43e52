#pragma once

// Growth statistics for M_n: the normalised n-th root (1/n) * M_n^(1/n) and
// side-by-side comparisons with the double-factorial lower bound and the
// asymptotic envelopes.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "olives/counting.hpp"

namespace olives {

using Real = boost::multiprecision::cpp_bin_float_50;

// Source of M_n values, so reports can sit on top of a cache.
using CountProvider = std::function<BigCount(std::uint64_t)>;

// (1/n) * count^(1/n). The logarithm is taken from the leading decimal
// digits of the exact integer plus a power of ten, never from a machine
// double. Requires n >= 1 and count >= 1.
Real nth_root_ratio(const BigCount& count, std::uint64_t n);

Real lower_envelope();  // 2/e
Real upper_envelope();  // 4/e

struct RatioReport {
    std::uint64_t n = 0;
    BigCount count;
    Real ratio;
    // Set when ratio is not strictly below the previous row's.
    bool breaks_decrease = false;
};

std::vector<RatioReport> ratio_table(std::uint64_t max_n, const CountProvider& counts);
std::vector<RatioReport> ratio_table(std::uint64_t max_n);

// Envelope columns ignore the o(n) corrections of the asymptotic bounds,
// so they are informational and never asserted.
struct BoundReport {
    std::uint64_t n = 0;
    BigCount count;
    BigCount double_factorial;  // (2n-1)!!
    Real lower_envelope;        // (2/e)^n n^n
    Real upper_envelope;        // (4/e)^n n^n
    Real crude_bound;           // 108^n n^n
    bool lower_bound_holds = false;
};

std::vector<BoundReport> bound_table(std::uint64_t max_n, const CountProvider& counts);
std::vector<BoundReport> bound_table(std::uint64_t max_n);

std::string format_fixed(const Real& x, int decimals);
std::string format_scientific(const Real& x, int digits);

}  // namespace olives

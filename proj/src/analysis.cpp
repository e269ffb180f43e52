#include "olives/analysis.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace olives {

namespace {

// Digits kept in the integer part before the logarithm is taken. 40
// decimal digits leave the truncation error far below the 50-digit
// working precision of Real.
constexpr std::size_t kLeadingDigits = 40;

Real log_of(const BigCount& x) {
    const std::string digits = to_decimal(x);
    if (digits.size() <= kLeadingDigits) return boost::multiprecision::log(Real(x));
    const std::size_t shift = digits.size() - kLeadingDigits;
    BigCount scale = 1;
    for (std::size_t k = 0; k < shift; ++k) scale *= 10;
    const BigCount head = x / scale;
    return boost::multiprecision::log(Real(head)) + Real(shift) * boost::multiprecision::log(Real(10));
}

Real power_envelope(const Real& base, std::uint64_t n) {
    if (n == 0) return Real(1);
    const Real rn(n);
    return boost::multiprecision::pow(base * rn, rn);
}

}  // namespace

Real nth_root_ratio(const BigCount& count, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("ratio needs n >= 1");
    if (count < 1) throw std::invalid_argument("ratio needs a positive count");
    const Real rn(n);
    return boost::multiprecision::exp(log_of(count) / rn) / rn;
}

Real lower_envelope() { return Real(2) / boost::multiprecision::exp(Real(1)); }
Real upper_envelope() { return Real(4) / boost::multiprecision::exp(Real(1)); }

std::vector<RatioReport> ratio_table(std::uint64_t max_n, const CountProvider& counts) {
    std::vector<RatioReport> out;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        RatioReport r;
        r.n = n;
        r.count = counts(n);
        r.ratio = nth_root_ratio(r.count, n);
        r.breaks_decrease = !out.empty() && !(r.ratio < out.back().ratio);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RatioReport> ratio_table(std::uint64_t max_n) {
    WalkCounter counter;
    return ratio_table(max_n, [&](std::uint64_t n) { return counter.count_games(n); });
}

std::vector<BoundReport> bound_table(std::uint64_t max_n, const CountProvider& counts) {
    std::vector<BoundReport> out;
    const Real crude_base(108);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        BoundReport b;
        b.n = n;
        b.count = counts(n);
        b.double_factorial = double_factorial(2 * static_cast<std::int64_t>(n) - 1);
        b.lower_envelope = power_envelope(lower_envelope(), n);
        b.upper_envelope = power_envelope(upper_envelope(), n);
        b.crude_bound = power_envelope(crude_base, n);
        b.lower_bound_holds = b.double_factorial <= b.count;
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<BoundReport> bound_table(std::uint64_t max_n) {
    WalkCounter counter;
    return bound_table(max_n, [&](std::uint64_t n) { return counter.count_games(n); });
}

std::string format_fixed(const Real& x, int decimals) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << x;
    return os.str();
}

std::string format_scientific(const Real& x, int digits) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(digits) << x;
    return os.str();
}

}  // namespace olives

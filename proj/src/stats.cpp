#include "pats/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pats {

namespace {

// Two-sided 97.5% normal quantile, i.e. z for a 95% interval.
constexpr long double kZ = 1.959963985L;

long double pow10l(int n) {
    long double p = 1;
    for (int i = 0; i < n; ++i) p *= 10;
    return p;
}

// Formats a value scaled by 10^digits as a fixed-point decimal.
std::string fixed(long long scaled, int digits) {
    long long p10 = 1;
    for (int i = 0; i < digits; ++i) p10 *= 10;
    std::ostringstream os;
    os << scaled / p10;
    if (digits > 0) {
        os << '.';
        std::string frac = std::to_string(scaled % p10);
        os << std::string(digits - frac.size(), '0') << frac;
    }
    return os.str();
}

}  // namespace

Interval wilson(uint64_t successes, uint64_t n) {
    if (n == 0) throw EmptySampleError("cannot form an interval from zero instances");
    if (successes > n) throw EmptySampleError("more successes than instances");
    long double nn = static_cast<long double>(n);
    long double p = static_cast<long double>(successes) / nn;
    long double z2 = kZ * kZ;
    long double denom = 1 + z2 / nn;
    long double centre = (p + z2 / (2 * nn)) / denom;
    long double half = kZ * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    Interval iv{centre - half, centre + half};
    iv.lo = std::max(0.0L, iv.lo);
    iv.hi = std::min(1.0L, iv.hi);
    return iv;
}

Interval conservative_interval(const SampleSummary& s) {
    if (s.n == 0) throw EmptySampleError("cannot form an interval from zero instances");
    // Unknowns count as losses for the lower bound and wins for the upper.
    Interval lo_side = wilson(s.wins, s.n);
    Interval hi_side = wilson(s.wins + s.unknowns, s.n);
    return {lo_side.lo, hi_side.hi};
}

namespace {

struct RoundedBounds {
    long long lo, hi;       // bounds in percent, scaled by 10^digits
    long double mid_scaled; // true midpoint on the same scale
};

RoundedBounds outward(const Interval& iv, int digits) {
    long double scale = 100 * pow10l(digits);
    long double lo = iv.lo * scale, hi = iv.hi * scale;
    RoundedBounds rb;
    rb.lo = static_cast<long long>(std::floor(lo));
    rb.hi = static_cast<long long>(std::ceil(hi));
    rb.lo = std::max(rb.lo, 0LL);
    rb.hi = std::min(rb.hi, static_cast<long long>(scale));
    rb.mid_scaled = (lo + hi) / 2;
    return rb;
}

}  // namespace

std::string display_pm(const Interval& iv, int digits) {
    RoundedBounds rb = outward(iv, digits);
    long long width = rb.hi - rb.lo;
    long long half = (width + 1) / 2;
    long long centre;
    if (width % 2 == 0) {
        centre = (rb.lo + rb.hi) / 2;
    } else {
        // The rounded bounds straddle the representable grid; take the side
        // of the true midpoint when it is decisively off-centre, and round
        // down otherwise.
        long long lower = (rb.lo + rb.hi - 1) / 2;
        centre = (rb.mid_scaled - lower > 0.6L) ? lower + 1 : lower;
    }
    return fixed(centre, digits) + "% ± " + fixed(half, digits) + "%";
}

std::string display_range(const Interval& iv, int digits) {
    RoundedBounds rb = outward(iv, digits);
    long long scale = static_cast<long long>(100 * pow10l(digits));
    std::string lo = rb.lo == 0 ? "0" : fixed(rb.lo, digits);
    std::string hi = rb.hi == scale ? "100" : fixed(rb.hi, digits);
    return lo + "-" + hi + "%";
}

}  // namespace pats

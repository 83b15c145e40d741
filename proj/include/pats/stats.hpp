#ifndef PATS_STATS_HPP
#define PATS_STATS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pats {

struct EmptySampleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SampleSummary {
    uint64_t n = 0;
    uint64_t wins = 0;
    uint64_t losses = 0;
    uint64_t unknowns = 0;  // timed out or memed out
};

// Proportions as fractions of 1.
struct Interval {
    long double lo = 0;
    long double hi = 0;
};

// Two-sided Wilson score interval at 95% confidence.
Interval wilson(uint64_t successes, uint64_t n);

// Conservative interval for the true win rate: every unknown counts as a
// loss for the lower bound and as a win for the upper bound, each bound
// taken from the wider side of its Wilson interval.
Interval conservative_interval(const SampleSummary& s);

// "81.956% ± 0.096%": bounds rounded outward (lower down, upper up) at
// `digits` decimal places of a percentage, centre and half-width chosen to
// cover them.
std::string display_pm(const Interval& iv, int digits);

// "15.97-16.02%" with the same outward rounding; exact 0/100 endpoints
// print without decimals.
std::string display_range(const Interval& iv, int digits);

}  // namespace pats

#endif

#ifndef PATS_HARNESS_HPP
#define PATS_HARNESS_HPP

#include <iostream>
#include <string>

#include "pats/search.hpp"
#include "pats/stats.hpp"

namespace pats {

struct MalformedRecordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BatchOptions {
    uint32_t first_seed = 1;
    uint32_t count = 1;
    int jobs = 1;
    bool with_solution = false;  // embed winning move lists in records
    bool with_deal = false;      // embed the dealt layout in records
};

// One NDJSON line describing a solved instance.
std::string instance_record(const std::string& game, uint32_t seed, const RuleSet& rules,
                            const Layout& layout, const SearchResult& result,
                            bool with_solution, bool with_deal);

// Deals and solves `count` consecutive seeds, writing one record per line in
// seed order (regardless of job count), and returns the tally.
SampleSummary run_batch(const RuleSet& rules, const std::string& game,
                        const SearchLimits& limits, const SolveOptions& solve_options,
                        const BatchOptions& batch, std::ostream& out);

// Rebuilds a tally from an NDJSON record stream; malformed input reports
// the offending line number.
SampleSummary summarize_records(std::istream& in);

// JSON summary with the conservative 95% interval, plus its display form.
std::string summary_json(const SampleSummary& s, int digits = 3);

}  // namespace pats

#endif

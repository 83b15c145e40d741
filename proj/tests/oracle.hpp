#ifndef PATS_TESTS_ORACLE_HPP
#define PATS_TESTS_ORACLE_HPP

#include <cstdint>

#include "pats/deal.hpp"
#include "pats/game.hpp"

namespace pats::testing {

// Rule variants used to hunt for regression fixtures.
struct OracleOptions {
    // Drop every foundation-to-tableau move.  A deal that is winnable in
    // full but not under this ban depends on worrying a card back.
    bool ban_worry_back = false;
    // Drop only a foundation-to-tableau move of the card that the previous
    // move just played to that foundation.  A deal that is winnable in full
    // but not under this ban needs an immediate worry-back of the same card.
    bool ban_immediate_worry_back = false;
    // Once the stock is down to its last card, force the first available
    // waste-to-foundation build instead of branching.  This mimics the
    // unsound "auto-play the stock tail" shortcut: committing the tail card
    // can bury waste cards that are still needed.
    bool force_stock_autoplay = false;
};

struct OracleResult {
    bool winnable = false;
    bool exhausted = true;  // false if the node limit cut the search short
    uint64_t states = 0;
};

// Memoized brute-force reachability over raw (uncanonicalized) states.
// Works on state copies with no undo, no transposition-table eviction, no
// dominances and no streamliners, so it shares as little machinery with
// the solver as possible.
OracleResult oracle_solve(const RuleSet& rules, const Layout& layout,
                          const OracleOptions& options = {},
                          uint64_t state_limit = 20'000'000);

}  // namespace pats::testing

#endif

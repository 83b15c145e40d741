#ifndef PATS_DOMINANCE_HPP
#define PATS_DOMINANCE_HPP

#include <optional>
#include <vector>

#include "pats/game.hpp"

namespace pats {

struct ConfigConflictError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which soundness-preserving prunings are active.
struct DominanceConfig {
    // Commit a foundation move whose card can never be needed on the
    // tableau again (same-suit / no-build games).
    bool safe_same_suit = false;
    // The classic red-black safety rule: play rank r when both opposite-
    // colour foundations have reached r-1 and the same-colour partner r-2.
    bool safe_red_black = false;
    // Partial built groups may move only when the card uncovered by the
    // split is immediately buildable on a foundation.
    bool partial_pile = false;

    bool any() const { return safe_same_suit || safe_red_black || partial_pile; }
};

// The dominances that are sound for this rule set.
DominanceConfig applicable_dominances(const RuleSet& rules);

// Validates a hand-assembled configuration against the rule set's
// preconditions; throws ConfigConflictError on an unsound request.
void check_dominances(const RuleSet& rules, const DominanceConfig& cfg);

// If some legal foundation/hole move is provably safe to commit without
// branching, returns it.  Never selects moves from the stock or waste.
std::optional<Move> safe_foundation_move(const GameState& s, const RuleSet& rules,
                                         const DominanceConfig& cfg,
                                         const std::vector<Move>& moves);

// Applies the partial-built-group restriction in place.
void filter_partial_pile_moves(const GameState& s, const RuleSet& rules,
                               std::vector<Move>& moves);

}  // namespace pats

#endif

#include "pats/dominance.hpp"

#include <algorithm>

namespace pats {

namespace {

bool safe_same_suit_sound(const RuleSet& r) {
    return r.foundations_present && !r.complete_pile_moves && !r.hole &&
           (r.build == BuildPolicy::SameSuit || r.build == BuildPolicy::NoBuild);
}

bool safe_red_black_sound(const RuleSet& r) {
    return r.foundations_present && !r.complete_pile_moves && !r.hole &&
           !r.two_decks && r.build == BuildPolicy::RedBlack;
}

bool partial_pile_sound(const RuleSet& r) {
    return r.move_group == MoveBuiltGroup::PartialIfAboveBuildable &&
           r.foundations_present && !r.complete_pile_moves && !r.hole;
}

Card card_at(const GameState& s, const Move& m) {
    switch (m.from) {
        case Zone::Tableau: return s.tableau[m.from_index].top();
        case Zone::Cell: return s.cells[m.from_index];
        case Zone::Reserve: return s.reserve[m.from_index];
        default: return Card{};
    }
}

// Cards accumulated on the foundation of the given suit (max over the two
// slots is never needed: single-deck only for the red-black rule).
int suit_height(const GameState& s, int suit) { return s.foundations[suit]; }

}  // namespace

DominanceConfig applicable_dominances(const RuleSet& rules) {
    DominanceConfig cfg;
    cfg.safe_same_suit = safe_same_suit_sound(rules);
    cfg.safe_red_black = safe_red_black_sound(rules);
    cfg.partial_pile = partial_pile_sound(rules);
    return cfg;
}

void check_dominances(const RuleSet& rules, const DominanceConfig& cfg) {
    if (cfg.safe_same_suit && !safe_same_suit_sound(rules))
        throw ConfigConflictError(
            "safe same-suit foundation moves need non-removable-style builds "
            "(same-suit or no-build) with plain foundations");
    if (cfg.safe_red_black && !safe_red_black_sound(rules))
        throw ConfigConflictError(
            "the red-black safety rule needs a single-deck red-black game "
            "with plain foundations");
    if (cfg.partial_pile && !partial_pile_sound(rules))
        throw ConfigConflictError(
            "the partial built-group restriction applies only to rule sets "
            "with partial-if-card-above-buildable group moves and plain foundations");
    if (cfg.safe_same_suit && cfg.safe_red_black)
        throw ConfigConflictError("conflicting foundation safety rules requested");
}

std::optional<Move> safe_foundation_move(const GameState& s, const RuleSet& rules,
                                         const DominanceConfig& cfg,
                                         const std::vector<Move>& moves) {
    if (!cfg.safe_same_suit && !cfg.safe_red_black) return std::nullopt;
    for (const Move& m : moves) {
        if (m.to != Zone::Foundation || m.count != 1) continue;
        // Stock and waste cards are never committed automatically: playing
        // them changes what later deals uncover.
        if (m.from != Zone::Tableau && m.from != Zone::Cell && m.from != Zone::Reserve)
            continue;
        if (cfg.safe_same_suit) return m;
        Card c = card_at(s, m);
        // Tableau builds use plain rank arithmetic even when foundations
        // wrap past the maximum rank (random-base games), so the guards are
        // phrased in terms of the ranks that could still build on or near
        // the committed card, converted to foundation distances. With an
        // ace base this reduces to the familiar thresholds d-1 and d-2.
        auto distance = [&](int rank) {
            if (rank < 1) return 0;
            return (rank - s.base_rank + rules.max_rank) % rules.max_rank + 1;
        };
        int e1 = distance(c.rank() - 1);  // opposite colour, builds on c
        // A card two ranks below c of its own colour only ever needs c when
        // an opposite-colour card can be worried back on top of it, so the
        // same-colour guards matter only with removable foundations.
        int e2 = rules.foundations_removable ? distance(c.rank() - 2) : 0;
        int suit = c.suit_index();
        // Suits are C=0, D=1, H=2, S=3; xor with 3 pairs each suit with the
        // other suit of its colour, xor with 1 or 2 crosses colours.
        int partner = suit ^ 0x3;
        int opp1 = suit ^ 0x1, opp2 = suit ^ 0x2;
        if (suit_height(s, opp1) >= e1 && suit_height(s, opp2) >= e1 &&
            suit_height(s, partner) >= e2 && suit_height(s, suit) >= e2)
            return m;
    }
    return std::nullopt;
}

void filter_partial_pile_moves(const GameState& s, const RuleSet& rules,
                               std::vector<Move>& moves) {
    auto foundation_ready = [&](Card c) {
        for (int d = 0; d < rules.decks(); ++d)
            if (next_foundation_rank(s, rules, c.suit_index() + 4 * d) == c.rank())
                return true;
        return false;
    };
    BuildPolicy gp = rules.group_policy == BuiltGroupPolicy::SameSuit
                         ? BuildPolicy::SameSuit
                         : rules.build;
    auto splits_run_wastefully = [&](const Move& m) {
        if (m.from != Zone::Tableau || m.to != Zone::Tableau) return false;
        const Pile& pile = s.tableau[m.from_index];
        int above = pile.size() - m.count - 1;
        if (above < pile.down) return false;  // nothing face-up is uncovered
        Card bottom = pile.cards[pile.size() - m.count];
        if (!builds_on(bottom, pile.cards[above], gp)) return false;
        return !foundation_ready(pile.cards[above]);
    };
    moves.erase(std::remove_if(moves.begin(), moves.end(), splits_run_wastefully),
                moves.end());
}

}  // namespace pats

#ifndef PATS_GAME_HPP
#define PATS_GAME_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pats/deal.hpp"
#include "pats/rules.hpp"

namespace pats {

struct InconsistentLayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IllegalMoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Zone : uint8_t { Tableau, Foundation, Hole, Cell, Reserve, Stock, Waste };

struct Move {
    Zone from = Zone::Tableau;
    Zone to = Zone::Tableau;
    uint8_t from_index = 0;
    uint8_t to_index = 0;
    uint8_t count = 1;  // cards moved for tableau groups / complete piles

    bool operator==(const Move&) const = default;
};

std::string to_string(const Move& m);

// Everything needed to reverse an applied move.
struct UndoToken {
    Move move;
    uint8_t dealt = 0;          // cards moved by a stock deal or redeal
    bool flipped = false;       // a tableau card was turned face up
    uint8_t prev_hole_rank = 0; // hole top before a hole build
    Card moved;                 // the card a single-card move displaced
    std::vector<Card> removed;  // cards a complete-pile move removed
};

struct Pile {
    std::vector<Card> cards;  // index 0 = bottom
    int down = 0;             // number of face-down cards at the bottom

    bool empty() const { return cards.empty(); }
    int size() const { return static_cast<int>(cards.size()); }
    Card top() const { return cards.back(); }
    bool operator==(const Pile&) const = default;
};

struct GameState {
    std::vector<Pile> tableau;
    // Cards accumulated per foundation slot; slot = suit + 4*deck.
    std::array<uint8_t, 8> foundations{};
    uint8_t base_rank = 1;
    uint8_t hole_rank = 0;   // rank of the hole's top card, 0 if no hole
    uint8_t hole_count = 0;
    std::vector<Card> cells;    // fixed length; empty slots hold Card{}
    std::vector<Card> reserve;  // index 0 = bottom; top is back()
    std::vector<Card> stock;    // back() is next dealt
    std::vector<Card> waste;    // back() is playable top
    uint8_t total_cards = 0;

    bool operator==(const GameState&) const = default;

    int foundation_total() const {
        int n = 0;
        for (uint8_t f : foundations) n += f;
        return n + hole_count;
    }
};

// Builds the starting state and checks card conservation (each pack card
// appears exactly once across all zones).
GameState initial_state(const RuleSet& rules, const Layout& layout);

bool is_won(const GameState& s);

// The rank that foundation slot `slot` will accept next, or 0 if full.
int next_foundation_rank(const GameState& s, const RuleSet& rules, int slot);

// True if `c` may legally land on tableau top `top` under the build policy.
bool builds_on(Card c, Card top, BuildPolicy policy);

// All legal moves in a fixed deterministic order.  When an automatic
// space-refill is pending (auto-from-reserve / auto-from-waste) that single
// forced move is returned alone.
std::vector<Move> legal_moves(const GameState& s, const RuleSet& rules);

UndoToken apply(GameState& s, const RuleSet& rules, const Move& m);
void undo(GameState& s, const RuleSet& rules, const UndoToken& token);

enum class CanonMode : uint8_t {
    Game,             // exact, except suit erasure for suit-indifferent games
    ColorStreamliner  // additionally merge suits within a colour on the tableau
};

// Canonical byte-string key: equal keys iff the positions are equivalent
// under pile order, cell order and (where applicable) suit renaming.
std::string canonical_key(const GameState& s, const RuleSet& rules,
                          CanonMode mode = CanonMode::Game);

// Multi-line human-readable board, for debugging.
std::string dump_state(const GameState& s, const RuleSet& rules);

}  // namespace pats

#endif

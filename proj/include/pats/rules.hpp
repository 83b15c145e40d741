#ifndef PATS_RULES_HPP
#define PATS_RULES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pats {

// ---- Errors -----------------------------------------------------------

struct RulesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedJsonError : RulesError {
    using RulesError::RulesError;
};
struct UnknownFieldError : RulesError {
    using RulesError::RulesError;
};
struct InvalidValueError : RulesError {
    using RulesError::RulesError;
};
struct UnsupportedError : RulesError {
    using RulesError::RulesError;
};

// ---- Enumerations -----------------------------------------------------

enum class BuildPolicy : uint8_t { AnySuit, RedBlack, SameSuit, NoBuild };
enum class SpacesPolicy : uint8_t { Any, Kings, None, AutoFromReserve, AutoFromWaste };
enum class MoveBuiltGroup : uint8_t { No, Yes, WholePile, PartialIfAboveBuildable };
enum class BuiltGroupPolicy : uint8_t { SameAsBuild, SameSuit };
enum class FaceUpCards : uint8_t { All, Top };
enum class FoundationsInitial : uint8_t { None, One, All };
enum class BaseCard : uint8_t { Ace, Random };
enum class DealType : uint8_t { Waste, TableauPiles };

// ---- Rule set ---------------------------------------------------------

struct RuleSet {
    // tableau
    int tableau_count = 8;
    BuildPolicy build = BuildPolicy::AnySuit;
    SpacesPolicy spaces = SpacesPolicy::Any;
    bool diagonal_deal = false;
    MoveBuiltGroup move_group = MoveBuiltGroup::No;
    BuiltGroupPolicy group_policy = BuiltGroupPolicy::SameAsBuild;
    FaceUpCards face_up = FaceUpCards::All;

    // foundations / hole
    bool foundations_present = true;
    FoundationsInitial foundations_initial = FoundationsInitial::None;
    BaseCard base_card = BaseCard::Ace;
    bool foundations_removable = false;
    bool complete_pile_moves = false;
    bool hole = false;

    // cells
    int cells = 0;
    int cells_prefilled = 0;

    // stock
    int stock_size = 0;
    DealType deal_type = DealType::Waste;
    int deal_count = 1;
    bool redeal = false;

    // reserve
    int reserve_size = 0;
    bool reserve_stacked = false;

    // deck
    int max_rank = 13;
    bool two_decks = false;

    bool operator==(const RuleSet&) const = default;

    int decks() const { return two_decks ? 2 : 1; }
    int total_cards() const { return 4 * max_rank * decks(); }
    int foundation_slots() const { return 4 * decks(); }
};

// Number of cards consumed before tableau dealing begins (foundation or
// hole seeds plus pre-filled cells plus reserve).
int pre_tableau_cards(const RuleSet& r);
int foundation_seed_count(const RuleSet& r);
int tableau_card_count(const RuleSet& r);

// Per-pile deal sizes implied by the rule set (square or diagonal layout).
std::vector<int> pile_sizes(const RuleSet& r);

struct Diagnostic {
    std::string message;
};

// Structural consistency checks beyond field-level parsing; empty result
// means the rule set is playable.
std::vector<Diagnostic> validate(const RuleSet& r);

// Parse a JSON rule description.  Unknown fields and out-of-domain values
// raise; recognised-but-unsupported game classes raise UnsupportedError.
RuleSet parse_rules(const std::string& json_text);
RuleSet load_rules_file(const std::string& path);

// Emit the fully-explicit JSON document (every field present, defaults
// included).  parse_rules(serialize_rules(r)) == r for any valid r.
std::string serialize_rules(const RuleSet& r);

// True when suits never influence legality, so canonical keys may erase
// them entirely (e.g. Black Hole and Worm Hole).
bool suit_indifferent(const RuleSet& r);

}  // namespace pats

#endif

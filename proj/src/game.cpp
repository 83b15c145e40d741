#include "pats/game.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <map>
#include <sstream>

namespace pats {

namespace {

const char* zone_letter(Zone z) {
    switch (z) {
        case Zone::Tableau: return "T";
        case Zone::Foundation: return "F";
        case Zone::Hole: return "H";
        case Zone::Cell: return "C";
        case Zone::Reserve: return "R";
        case Zone::Stock: return "S";
        case Zone::Waste: return "W";
    }
    return "?";
}

bool zone_indexed(Zone z) {
    return z == Zone::Tableau || z == Zone::Foundation || z == Zone::Cell ||
           z == Zone::Reserve;
}

}  // namespace

std::string to_string(const Move& m) {
    std::ostringstream os;
    os << zone_letter(m.from);
    if (zone_indexed(m.from)) os << static_cast<int>(m.from_index);
    os << "->" << zone_letter(m.to);
    if (zone_indexed(m.to)) os << static_cast<int>(m.to_index);
    if (m.count > 1) os << " x" << static_cast<int>(m.count);
    return os.str();
}

GameState initial_state(const RuleSet& rules, const Layout& layout) {
    GameState s;
    s.total_cards = static_cast<uint8_t>(rules.total_cards());
    s.base_rank = static_cast<uint8_t>(layout.base_rank);
    s.tableau.resize(rules.tableau_count);
    if (layout.tableau.size() != static_cast<size_t>(rules.tableau_count) ||
        layout.face_down.size() != layout.tableau.size())
        throw InconsistentLayoutError("layout tableau shape does not match rules");
    for (size_t p = 0; p < layout.tableau.size(); ++p) {
        s.tableau[p].cards = layout.tableau[p];
        s.tableau[p].down = layout.face_down[p];
        if (s.tableau[p].down < 0 || s.tableau[p].down > s.tableau[p].size() ||
            (s.tableau[p].down == s.tableau[p].size() && !s.tableau[p].empty()))
            throw InconsistentLayoutError("bad face-down count in layout");
    }

    if (rules.hole) {
        if (layout.foundation_seeds.size() != 1 ||
            layout.foundation_seeds[0] != Card(1, Suit::Spades, 0))
            throw InconsistentLayoutError("hole games start with the ace of spades");
        s.hole_rank = 1;
        s.hole_count = 1;
    } else {
        if (layout.foundation_seeds.size() !=
            static_cast<size_t>(foundation_seed_count(rules)))
            throw InconsistentLayoutError("wrong number of foundation seeds");
        for (Card c : layout.foundation_seeds) {
            if (rules.base_card == BaseCard::Ace && c.rank() != layout.base_rank)
                throw InconsistentLayoutError("foundation seed does not match base");
            int slot = c.suit_index();
            if (s.foundations[slot] != 0) slot += 4;
            if (slot >= rules.foundation_slots() || s.foundations[slot] != 0)
                throw InconsistentLayoutError("duplicate foundation seed");
            s.foundations[slot] = 1;
        }
    }

    if (layout.cells.size() > static_cast<size_t>(rules.cells))
        throw InconsistentLayoutError("too many pre-filled cells");
    s.cells.assign(rules.cells, Card{});
    for (size_t i = 0; i < layout.cells.size(); ++i) s.cells[i] = layout.cells[i];
    s.reserve = layout.reserve;
    s.stock = layout.stock;

    // Conservation: every pack card exactly once.
    std::map<uint8_t, int> seen;
    auto count = [&seen](Card c) {
        if (!c.empty()) ++seen[c.bits];
    };
    for (const auto& pile : s.tableau)
        for (Card c : pile.cards) count(c);
    for (Card c : s.cells) count(c);
    for (Card c : s.reserve) count(c);
    for (Card c : s.stock) count(c);
    for (Card c : layout.foundation_seeds) count(c);
    auto pack = canonical_pack(rules.max_rank, rules.two_decks);
    if (seen.size() != pack.size())
        throw InconsistentLayoutError("layout does not contain the full pack");
    for (Card c : pack)
        if (seen[c.bits] != 1)
            throw InconsistentLayoutError("duplicate or missing card in layout");
    return s;
}

bool is_won(const GameState& s) {
    return s.foundation_total() == s.total_cards;
}

int next_foundation_rank(const GameState& s, const RuleSet& rules, int slot) {
    int count = s.foundations[slot];
    if (count >= rules.max_rank) return 0;
    return (s.base_rank - 1 + count) % rules.max_rank + 1;
}

bool builds_on(Card c, Card top, BuildPolicy policy) {
    if (c.rank() + 1 != top.rank()) return false;
    switch (policy) {
        case BuildPolicy::AnySuit: return true;
        case BuildPolicy::RedBlack: return c.is_red() != top.is_red();
        case BuildPolicy::SameSuit: return c.suit() == top.suit();
        case BuildPolicy::NoBuild: return false;
    }
    return false;
}

namespace {

// Foundation slot that will accept card c right now, or -1.
int accepting_slot(const GameState& s, const RuleSet& rules, Card c) {
    for (int d = 0; d < rules.decks(); ++d) {
        int slot = c.suit_index() + 4 * d;
        if (next_foundation_rank(s, rules, slot) == c.rank()) return slot;
    }
    return -1;
}

bool hole_accepts(const GameState& s, const RuleSet& rules, Card c) {
    if (!rules.hole || s.hole_rank == 0) return false;
    int diff = (c.rank() - s.hole_rank + rules.max_rank) % rules.max_rank;
    return diff == 1 || diff == rules.max_rank - 1;
}

// Whether a card may be placed on an empty tableau pile.  The automatic
// policies degrade to "any" once their source zone is exhausted; while the
// source has cards the forced refill preempts every other move.
bool space_accepts(const RuleSet& rules, Card c) {
    switch (rules.spaces) {
        case SpacesPolicy::Any:
        case SpacesPolicy::AutoFromReserve:
        case SpacesPolicy::AutoFromWaste: return true;
        case SpacesPolicy::Kings: return c.rank() == rules.max_rank;
        case SpacesPolicy::None: return false;
    }
    return false;
}

BuildPolicy group_build_policy(const RuleSet& rules) {
    return rules.group_policy == BuiltGroupPolicy::SameSuit ? BuildPolicy::SameSuit
                                                            : rules.build;
}

// Length of the movable built run at the top of a pile (face-up, properly
// sequenced under the group policy).
int run_length(const Pile& pile, const RuleSet& rules) {
    if (pile.empty()) return 0;
    BuildPolicy gp = group_build_policy(rules);
    int k = 1;
    while (pile.size() - k - 1 >= pile.down &&
           builds_on(pile.cards[pile.size() - k],
                     pile.cards[pile.size() - k - 1], gp))
        ++k;
    return k;
}

// Pending forced refill of an empty tableau pile, if any.
std::optional<Move> forced_refill(const GameState& s, const RuleSet& rules) {
    const std::vector<Card>* source = nullptr;
    Zone zone{};
    if (rules.spaces == SpacesPolicy::AutoFromReserve && !s.reserve.empty()) {
        source = &s.reserve;
        zone = Zone::Reserve;
    } else if (rules.spaces == SpacesPolicy::AutoFromWaste && !s.waste.empty()) {
        source = &s.waste;
        zone = Zone::Waste;
    }
    if (!source) return std::nullopt;
    for (size_t p = 0; p < s.tableau.size(); ++p) {
        if (s.tableau[p].empty()) {
            Move m;
            m.from = zone;
            m.from_index = static_cast<uint8_t>(source->size() - 1);
            m.to = Zone::Tableau;
            m.to_index = static_cast<uint8_t>(p);
            return m;
        }
    }
    return std::nullopt;
}

// Complete-pile foundation move from pile p, if its top run is a full suit.
std::optional<Move> complete_pile_move(const GameState& s, const RuleSet& rules, int p) {
    const Pile& pile = s.tableau[p];
    int n = rules.max_rank;
    if (pile.size() < n || pile.size() - n < pile.down) return std::nullopt;
    Suit suit = pile.top().suit();
    for (int i = 0; i < n; ++i) {
        Card c = pile.cards[pile.size() - 1 - i];
        if (c.suit() != suit || c.rank() != i + 1) return std::nullopt;
    }
    for (int d = 0; d < rules.decks(); ++d) {
        int slot = static_cast<int>(suit) + 4 * d;
        if (s.foundations[slot] == 0)
            return Move{Zone::Tableau, Zone::Foundation, static_cast<uint8_t>(p),
                        static_cast<uint8_t>(slot), static_cast<uint8_t>(n)};
    }
    return std::nullopt;
}

// Appends builds of card c (a single card or the bottom of a group of
// size g from tableau pile src, or -1 for non-tableau sources).
void add_tableau_dests(const GameState& s, const RuleSet& rules, Card c, Zone from,
                       int from_index, int g, int src, std::vector<Move>& out) {
    int first_empty = -1;
    for (size_t q = 0; q < s.tableau.size(); ++q) {
        if (static_cast<int>(q) == src) continue;
        const Pile& dst = s.tableau[q];
        if (dst.empty()) {
            if (first_empty < 0) first_empty = static_cast<int>(q);
            continue;
        }
        if (builds_on(c, dst.top(), rules.build))
            out.push_back(Move{from, Zone::Tableau, static_cast<uint8_t>(from_index),
                               static_cast<uint8_t>(q), static_cast<uint8_t>(g)});
    }
    if (first_empty >= 0 && space_accepts(rules, c)) {
        // Moving an entire face-up pile between two spaces is a no-op.
        bool whole_pile = src >= 0 && g == s.tableau[src].size();
        if (!whole_pile || s.tableau[src].down > 0 ||
            !space_accepts(rules, s.tableau[src].cards[0]))
            out.push_back(Move{from, Zone::Tableau, static_cast<uint8_t>(from_index),
                               static_cast<uint8_t>(first_empty),
                               static_cast<uint8_t>(g)});
    }
}

}  // namespace

std::vector<Move> legal_moves(const GameState& s, const RuleSet& rules) {
    std::vector<Move> out;
    if (auto forced = forced_refill(s, rules)) {
        out.push_back(*forced);
        return out;
    }

    // Foundation and hole builds.
    auto try_foundation = [&](Card c, Zone from, int from_index) {
        if (rules.hole) {
            if (hole_accepts(s, rules, c))
                out.push_back(Move{from, Zone::Hole, static_cast<uint8_t>(from_index), 0, 1});
            return;
        }
        if (!rules.foundations_present || rules.complete_pile_moves) return;
        int slot = accepting_slot(s, rules, c);
        if (slot >= 0)
            out.push_back(Move{from, Zone::Foundation, static_cast<uint8_t>(from_index),
                               static_cast<uint8_t>(slot), 1});
    };

    if (rules.complete_pile_moves) {
        for (size_t p = 0; p < s.tableau.size(); ++p)
            if (auto m = complete_pile_move(s, rules, static_cast<int>(p)))
                out.push_back(*m);
    } else {
        for (size_t p = 0; p < s.tableau.size(); ++p)
            if (!s.tableau[p].empty())
                try_foundation(s.tableau[p].top(), Zone::Tableau, static_cast<int>(p));
        for (size_t i = 0; i < s.cells.size(); ++i)
            if (!s.cells[i].empty()) try_foundation(s.cells[i], Zone::Cell, static_cast<int>(i));
        if (!s.reserve.empty()) {
            if (rules.reserve_stacked) {
                try_foundation(s.reserve.back(), Zone::Reserve,
                               static_cast<int>(s.reserve.size()) - 1);
            } else {
                for (size_t i = 0; i < s.reserve.size(); ++i)
                    try_foundation(s.reserve[i], Zone::Reserve, static_cast<int>(i));
            }
        }
        if (!s.waste.empty())
            try_foundation(s.waste.back(), Zone::Waste,
                           static_cast<int>(s.waste.size()) - 1);
    }

    // Tableau group moves.
    if (rules.build != BuildPolicy::NoBuild || rules.spaces != SpacesPolicy::None) {
        for (size_t p = 0; p < s.tableau.size(); ++p) {
            const Pile& pile = s.tableau[p];
            if (pile.empty()) continue;
            int run = run_length(pile, rules);
            int lo = 1, hi = 1;
            switch (rules.move_group) {
                case MoveBuiltGroup::No: break;
                case MoveBuiltGroup::Yes:
                case MoveBuiltGroup::PartialIfAboveBuildable: hi = run; break;
                case MoveBuiltGroup::WholePile:
                    // Only the entire pile may move (when fully built & face up).
                    if (run == pile.size()) lo = hi = pile.size();
                    else if (pile.size() > 1) continue;
                    break;
            }
            for (int g = lo; g <= hi; ++g)
                add_tableau_dests(s, rules, pile.cards[pile.size() - g], Zone::Tableau,
                                  static_cast<int>(p), g, static_cast<int>(p), out);
        }
    }

    // Single cards entering the tableau from cells, reserve and waste.
    for (size_t i = 0; i < s.cells.size(); ++i)
        if (!s.cells[i].empty())
            add_tableau_dests(s, rules, s.cells[i], Zone::Cell, static_cast<int>(i), 1, -1, out);
    if (!s.reserve.empty() && rules.spaces != SpacesPolicy::AutoFromReserve) {
        if (rules.reserve_stacked) {
            add_tableau_dests(s, rules, s.reserve.back(), Zone::Reserve,
                              static_cast<int>(s.reserve.size()) - 1, 1, -1, out);
        } else {
            for (size_t i = 0; i < s.reserve.size(); ++i)
                add_tableau_dests(s, rules, s.reserve[i], Zone::Reserve,
                                  static_cast<int>(i), 1, -1, out);
        }
    }
    if (!s.waste.empty() && rules.spaces != SpacesPolicy::AutoFromWaste)
        add_tableau_dests(s, rules, s.waste.back(), Zone::Waste,
                          static_cast<int>(s.waste.size()) - 1, 1, -1, out);

    // Worry-backs: foundation tops returning to the tableau.
    if (rules.foundations_present && rules.foundations_removable) {
        for (int slot = 0; slot < rules.foundation_slots(); ++slot) {
            int count = s.foundations[slot];
            if (count == 0) continue;
            int rank = (s.base_rank - 1 + count - 1) % rules.max_rank + 1;
            Card c(rank, static_cast<Suit>(slot % 4), slot / 4);
            add_tableau_dests(s, rules, c, Zone::Foundation, slot, 1, -1, out);
        }
    }

    // Moves into the first empty cell.
    if (!s.cells.empty()) {
        int cell = -1;
        for (size_t i = 0; i < s.cells.size(); ++i)
            if (s.cells[i].empty()) {
                cell = static_cast<int>(i);
                break;
            }
        if (cell >= 0) {
            for (size_t p = 0; p < s.tableau.size(); ++p)
                if (!s.tableau[p].empty())
                    out.push_back(Move{Zone::Tableau, Zone::Cell, static_cast<uint8_t>(p),
                                       static_cast<uint8_t>(cell), 1});
            if (!s.reserve.empty() && rules.reserve_stacked)
                out.push_back(Move{Zone::Reserve, Zone::Cell,
                                   static_cast<uint8_t>(s.reserve.size() - 1),
                                   static_cast<uint8_t>(cell), 1});
            if (!s.waste.empty())
                out.push_back(Move{Zone::Waste, Zone::Cell,
                                   static_cast<uint8_t>(s.waste.size() - 1),
                                   static_cast<uint8_t>(cell), 1});
        }
    }

    // Stock moves.
    if (!s.stock.empty()) {
        out.push_back(Move{Zone::Stock,
                           rules.deal_type == DealType::Waste ? Zone::Waste : Zone::Tableau,
                           0, 0, 1});
    } else if (rules.redeal && !s.waste.empty()) {
        out.push_back(Move{Zone::Waste, Zone::Stock, 0, 0, 1});
    }
    return out;
}

namespace {

Card take_from(GameState& s, const RuleSet& rules, const Move& m, UndoToken& t) {
    switch (m.from) {
        case Zone::Tableau: {
            Pile& pile = s.tableau[m.from_index];
            Card c = pile.cards.back();
            pile.cards.pop_back();
            if (!pile.cards.empty() && pile.down == pile.size()) {
                --pile.down;
                t.flipped = true;
            }
            return c;
        }
        case Zone::Cell: {
            Card c = s.cells[m.from_index];
            s.cells[m.from_index] = Card{};
            return c;
        }
        case Zone::Reserve: {
            Card c = s.reserve[m.from_index];
            s.reserve.erase(s.reserve.begin() + m.from_index);
            return c;
        }
        case Zone::Waste: {
            Card c = s.waste.back();
            s.waste.pop_back();
            return c;
        }
        case Zone::Foundation: {
            int slot = m.from_index;
            int count = s.foundations[slot];
            int rank = (s.base_rank - 1 + count - 1) % rules.max_rank + 1;
            --s.foundations[slot];
            return Card(rank, static_cast<Suit>(slot % 4), slot / 4);
        }
        default:
            throw IllegalMoveError("bad move source");
    }
}

void put_back(GameState& s, const RuleSet&, const Move& m, Card c) {
    switch (m.from) {
        case Zone::Tableau: s.tableau[m.from_index].cards.push_back(c); break;
        case Zone::Cell: s.cells[m.from_index] = c; break;
        case Zone::Reserve: s.reserve.insert(s.reserve.begin() + m.from_index, c); break;
        case Zone::Waste: s.waste.push_back(c); break;
        case Zone::Foundation: ++s.foundations[m.from_index]; break;
        default: throw IllegalMoveError("bad move source");
    }
}

}  // namespace

UndoToken apply(GameState& s, const RuleSet& rules, const Move& m) {
    UndoToken t;
    t.move = m;

    // Stock deals and redeals.
    if (m.from == Zone::Stock && m.to == Zone::Waste) {
        int d = std::min<int>(rules.deal_count, static_cast<int>(s.stock.size()));
        for (int i = 0; i < d; ++i) {
            s.waste.push_back(s.stock.back());
            s.stock.pop_back();
        }
        t.dealt = static_cast<uint8_t>(d);
        return t;
    }
    if (m.from == Zone::Stock && m.to == Zone::Tableau) {
        int d = std::min<int>(static_cast<int>(s.tableau.size()),
                              static_cast<int>(s.stock.size()));
        for (int i = 0; i < d; ++i) {
            s.tableau[i].cards.push_back(s.stock.back());
            s.stock.pop_back();
        }
        t.dealt = static_cast<uint8_t>(d);
        return t;
    }
    if (m.from == Zone::Waste && m.to == Zone::Stock) {
        t.dealt = static_cast<uint8_t>(s.waste.size());
        // Flipping the waste over restores the original deal order: the last
        // card dealt goes to the bottom of the stock.
        while (!s.waste.empty()) {
            s.stock.push_back(s.waste.back());
            s.waste.pop_back();
        }
        return t;
    }

    // Tableau group moves.
    if (m.from == Zone::Tableau && m.to == Zone::Tableau && m.count >= 1) {
        Pile& src = s.tableau[m.from_index];
        Pile& dst = s.tableau[m.to_index];
        dst.cards.insert(dst.cards.end(), src.cards.end() - m.count, src.cards.end());
        src.cards.erase(src.cards.end() - m.count, src.cards.end());
        if (!src.cards.empty() && src.down == src.size()) {
            --src.down;
            t.flipped = true;
        }
        return t;
    }

    // Complete-pile foundation moves.
    if (m.to == Zone::Foundation && m.count > 1) {
        Pile& src = s.tableau[m.from_index];
        t.removed.assign(src.cards.end() - m.count, src.cards.end());
        src.cards.erase(src.cards.end() - m.count, src.cards.end());
        if (!src.cards.empty() && src.down == src.size()) {
            --src.down;
            t.flipped = true;
        }
        s.foundations[m.to_index] = static_cast<uint8_t>(rules.max_rank);
        return t;
    }

    // Single-card moves.
    Card c = take_from(s, rules, m, t);
    t.moved = c;
    switch (m.to) {
        case Zone::Foundation: ++s.foundations[m.to_index]; break;
        case Zone::Hole:
            t.prev_hole_rank = s.hole_rank;
            s.hole_rank = static_cast<uint8_t>(c.rank());
            ++s.hole_count;
            break;
        case Zone::Tableau: s.tableau[m.to_index].cards.push_back(c); break;
        case Zone::Cell: s.cells[m.to_index] = c; break;
        default: throw IllegalMoveError("bad move destination");
    }
    return t;
}

void undo(GameState& s, const RuleSet& rules, const UndoToken& t) {
    const Move& m = t.move;

    if (m.from == Zone::Stock && m.to == Zone::Waste) {
        for (int i = 0; i < t.dealt; ++i) {
            s.stock.push_back(s.waste.back());
            s.waste.pop_back();
        }
        return;
    }
    if (m.from == Zone::Stock && m.to == Zone::Tableau) {
        for (int i = t.dealt - 1; i >= 0; --i) {
            s.stock.push_back(s.tableau[i].cards.back());
            s.tableau[i].cards.pop_back();
        }
        return;
    }
    if (m.from == Zone::Waste && m.to == Zone::Stock) {
        for (int i = 0; i < t.dealt; ++i) {
            s.waste.push_back(s.stock.back());
            s.stock.pop_back();
        }
        return;
    }

    if (m.from == Zone::Tableau && m.to == Zone::Tableau) {
        Pile& src = s.tableau[m.from_index];
        Pile& dst = s.tableau[m.to_index];
        if (t.flipped) ++src.down;
        src.cards.insert(src.cards.end(), dst.cards.end() - m.count, dst.cards.end());
        dst.cards.erase(dst.cards.end() - m.count, dst.cards.end());
        return;
    }

    if (m.to == Zone::Foundation && m.count > 1) {
        Pile& src = s.tableau[m.from_index];
        if (t.flipped) ++src.down;
        src.cards.insert(src.cards.end(), t.removed.begin(), t.removed.end());
        s.foundations[m.to_index] = 0;
        return;
    }

    switch (m.to) {
        case Zone::Foundation: --s.foundations[m.to_index]; break;
        case Zone::Hole:
            s.hole_rank = t.prev_hole_rank;
            --s.hole_count;
            break;
        case Zone::Tableau: s.tableau[m.to_index].cards.pop_back(); break;
        case Zone::Cell: s.cells[m.to_index] = Card{}; break;
        default: throw IllegalMoveError("bad move destination");
    }
    if (m.from == Zone::Tableau && t.flipped) ++s.tableau[m.from_index].down;
    put_back(s, rules, m, t.moved);
}

std::string canonical_key(const GameState& s, const RuleSet& rules, CanonMode mode) {
    bool suitless = suit_indifferent(rules);
    auto map_card = [&](Card c, bool in_tableau) -> uint8_t {
        if (suitless) return static_cast<uint8_t>(c.rank());
        if (mode == CanonMode::ColorStreamliner && in_tableau)
            return static_cast<uint8_t>(c.rank() | (c.is_red() ? 0x10 : 0x20));
        return c.bits;
    };

    // The whole key is assembled in a stack buffer and turned into a string
    // once at the end; this path runs for every generated child state.
    char out[640];
    char* w = out;
    *w++ = static_cast<char>(s.base_rank);
    if (rules.two_decks) {
        // Slots of the same suit are interchangeable: sort each pair.
        for (int suit = 0; suit < 4; ++suit) {
            uint8_t a = s.foundations[suit], b = s.foundations[suit + 4];
            *w++ = static_cast<char>(std::min(a, b));
            *w++ = static_cast<char>(std::max(a, b));
        }
    } else {
        for (int suit = 0; suit < 4; ++suit)
            *w++ = static_cast<char>(s.foundations[suit]);
    }
    *w++ = static_cast<char>(s.hole_rank);
    *w++ = static_cast<char>(s.hole_count);

    char* cells_begin = w;
    for (Card c : s.cells)
        if (!c.empty()) *w++ = static_cast<char>(map_card(c, false));
    std::sort(cells_begin, w);
    for (size_t i = s.cells.size() - (w - cells_begin); i > 0; --i) *w++ = '\0';

    auto append_zone = [&](const std::vector<Card>& zone) {
        *w++ = static_cast<char>(zone.size());
        for (Card c : zone) *w++ = static_cast<char>(map_card(c, false));
    };
    append_zone(s.reserve);
    append_zone(s.waste);
    append_zone(s.stock);

    // Encode every pile, then sort the spans exactly as sorting the
    // encodings as strings would: bytewise, shorter first on a tie.
    // Piles are interchangeable except while a stock still deals onto the
    // tableau: a deal targets piles by index, so permuted piles would
    // receive different cards and the positions are not equivalent.
    bool piles_interchangeable =
        rules.deal_type != DealType::TableauPiles || s.stock.empty();
    size_t npiles = s.tableau.size();
    std::array<std::pair<uint16_t, uint16_t>, 64> spans;  // offset, length
    char* piles_begin = w;
    for (size_t p = 0; p < npiles; ++p) {
        const Pile& pile = s.tableau[p];
        spans[p] = {static_cast<uint16_t>(w - piles_begin),
                    static_cast<uint16_t>(2 + pile.size())};
        *w++ = static_cast<char>(pile.size());
        *w++ = static_cast<char>(pile.down);
        for (int i = 0; i < pile.size(); ++i)
            *w++ = static_cast<char>(map_card(pile.cards[i], i >= pile.down));
    }
    if (piles_interchangeable) {
        std::sort(spans.begin(), spans.begin() + npiles,
                  [&](const auto& a, const auto& b) {
                      int c = std::memcmp(piles_begin + a.first,
                                          piles_begin + b.first,
                                          std::min(a.second, b.second));
                      return c != 0 ? c < 0 : a.second < b.second;
                  });
        char sorted[512];
        char* q = sorted;
        for (size_t p = 0; p < npiles; ++p) {
            std::memcpy(q, piles_begin + spans[p].first, spans[p].second);
            q += spans[p].second;
        }
        std::memcpy(piles_begin, sorted, q - sorted);
    }
    return std::string(out, w - out);
}

std::string dump_state(const GameState& s, const RuleSet& rules) {
    std::ostringstream os;
    if (rules.hole) {
        os << "hole: " << kRankChars[s.hole_rank] << " (" << static_cast<int>(s.hole_count)
           << " cards)\n";
    } else if (rules.foundations_present) {
        os << "foundations:";
        for (int slot = 0; slot < rules.foundation_slots(); ++slot) {
            int count = s.foundations[slot];
            os << ' ' << kSuitChars[slot % 4] << (slot >= 4 ? "'" : "") << ':';
            if (count == 0) {
                os << '-';
            } else {
                os << kRankChars[(s.base_rank - 1 + count - 1) % rules.max_rank + 1];
            }
        }
        os << '\n';
    }
    if (!s.cells.empty()) {
        os << "cells:";
        for (Card c : s.cells) os << ' ' << to_string(c);
        os << '\n';
    }
    if (!s.reserve.empty()) {
        os << "reserve:";
        for (Card c : s.reserve) os << ' ' << to_string(c);
        os << '\n';
    }
    for (size_t p = 0; p < s.tableau.size(); ++p) {
        os << 'T' << p << ':';
        const Pile& pile = s.tableau[p];
        for (int i = 0; i < pile.size(); ++i)
            os << ' ' << (i < pile.down ? "##" : to_string(pile.cards[i]));
        os << '\n';
    }
    if (rules.stock_size > 0) {
        os << "stock: " << s.stock.size() << " cards; waste:";
        for (Card c : s.waste) os << ' ' << to_string(c);
        os << '\n';
    }
    return os.str();
}

}  // namespace pats

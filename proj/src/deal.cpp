#include "pats/deal.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace pats {

using ordered_json = nlohmann::ordered_json;

uint32_t Generator::below(uint32_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    // Largest multiple of n representable in 32 bits; draws at or above it
    // are rejected.
    uint64_t limit = (uint64_t{1} << 32) - ((uint64_t{1} << 32) % n);
    uint32_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % n;
}

void shuffle(std::vector<Card>& cards, Generator& gen) {
    for (size_t i = cards.size(); i > 1; --i) {
        uint32_t j = gen.below(static_cast<uint32_t>(i));
        std::swap(cards[i - 1], cards[j]);
    }
}

namespace {

// Draws cards in order from a shuffled pack.
struct Draw {
    std::vector<Card> cards;
    size_t next = 0;

    Card take() { return cards.at(next++); }
    bool done() const { return next == cards.size(); }

    // Removes the first card matching pred from the remaining sequence.
    template <typename Pred>
    Card extract(Pred pred) {
        for (size_t i = next; i < cards.size(); ++i) {
            if (pred(cards[i])) {
                Card c = cards[i];
                cards.erase(cards.begin() + i);
                return c;
            }
        }
        throw std::logic_error("card not found in pack");
    }
};

}  // namespace

Layout deal(const RuleSet& rules, uint32_t seed) {
    Draw draw;
    draw.cards = canonical_pack(rules.max_rank, rules.two_decks);
    Generator gen(seed);
    shuffle(draw.cards, gen);

    Layout out;
    if (rules.hole) {
        // The hole always starts with the ace of spades (first deck).
        out.foundation_seeds.push_back(
            draw.extract([](Card c) { return c == Card(1, Suit::Spades, 0); }));
        out.base_rank = 1;
    } else if (rules.foundations_present) {
        switch (rules.foundations_initial) {
            case FoundationsInitial::None:
                break;
            case FoundationsInitial::One: {
                Card c = draw.take();
                out.foundation_seeds.push_back(c);
                out.base_rank = rules.base_card == BaseCard::Random ? c.rank() : 1;
                break;
            }
            case FoundationsInitial::All:
                for (int i = 0; i < rules.foundation_slots(); ++i)
                    out.foundation_seeds.push_back(
                        draw.extract([](Card c) { return c.rank() == 1; }));
                break;
        }
    }

    for (int i = 0; i < rules.cells_prefilled; ++i) out.cells.push_back(draw.take());
    for (int i = 0; i < rules.reserve_size; ++i) out.reserve.push_back(draw.take());

    auto sizes = pile_sizes(rules);
    out.tableau.resize(sizes.size());
    out.face_down.resize(sizes.size(), 0);
    for (size_t p = 0; p < sizes.size(); ++p) {
        for (int i = 0; i < sizes[p]; ++i) out.tableau[p].push_back(draw.take());
        if (rules.face_up == FaceUpCards::Top && sizes[p] > 1)
            out.face_down[p] = sizes[p] - 1;
    }

    // Remaining cards form the stock; the first of them is dealt first, so
    // store the stock with its back as the next card out.
    std::vector<Card> rest;
    while (!draw.done()) rest.push_back(draw.take());
    out.stock.assign(rest.rbegin(), rest.rend());
    return out;
}

namespace {

ordered_json cards_to_json(const std::vector<Card>& cards) {
    ordered_json arr = ordered_json::array();
    for (Card c : cards) arr.push_back(to_string(c) + (c.deck() ? "'" : ""));
    return arr;
}

std::vector<Card> cards_from_json(const nlohmann::json& arr, const char* where) {
    if (!arr.is_array()) throw MalformedJsonError(std::string(where) + " must be an array");
    std::vector<Card> out;
    for (const auto& v : arr) {
        std::string s = v.get<std::string>();
        int deck = 0;
        if (!s.empty() && s.back() == '\'') {
            deck = 1;
            s.pop_back();
        }
        Card c = card_from_string(s);
        out.push_back(Card(c.rank(), c.suit(), deck));
    }
    return out;
}

}  // namespace

std::string serialize_layout(const Layout& layout) {
    ordered_json doc;
    doc["base rank"] = layout.base_rank;
    doc["foundation seeds"] = cards_to_json(layout.foundation_seeds);
    doc["cells"] = cards_to_json(layout.cells);
    doc["reserve"] = cards_to_json(layout.reserve);
    ordered_json piles = ordered_json::array();
    for (const auto& pile : layout.tableau) piles.push_back(cards_to_json(pile));
    doc["tableau"] = piles;
    ordered_json down = ordered_json::array();
    for (int d : layout.face_down) down.push_back(d);
    doc["face down"] = down;
    // Stored in deal order: first element is the first card dealt.
    std::vector<Card> stock(layout.stock.rbegin(), layout.stock.rend());
    doc["stock"] = cards_to_json(stock);
    return doc.dump(2) + "\n";
}

Layout parse_layout(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedJsonError(std::string("malformed layout JSON: ") + e.what());
    }
    Layout out;
    out.base_rank = doc.at("base rank").get<int>();
    out.foundation_seeds = cards_from_json(doc.at("foundation seeds"), "foundation seeds");
    out.cells = cards_from_json(doc.at("cells"), "cells");
    out.reserve = cards_from_json(doc.at("reserve"), "reserve");
    for (const auto& pile : doc.at("tableau"))
        out.tableau.push_back(cards_from_json(pile, "tableau pile"));
    for (const auto& d : doc.at("face down")) out.face_down.push_back(d.get<int>());
    std::vector<Card> stock = cards_from_json(doc.at("stock"), "stock");
    out.stock.assign(stock.rbegin(), stock.rend());
    return out;
}

}  // namespace pats

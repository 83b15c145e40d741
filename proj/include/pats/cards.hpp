#ifndef PATS_CARDS_HPP
#define PATS_CARDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pats {

enum class Suit : uint8_t { Clubs = 0, Diamonds = 1, Hearts = 2, Spades = 3 };

// A card packed into one byte: rank in bits 0-3 (1=ace .. 13=king),
// suit in bits 4-5, deck index in bit 6.  bits == 0 is "no card".
struct Card {
    uint8_t bits = 0;

    Card() = default;
    Card(int rank, Suit suit, int deck = 0)
        : bits(static_cast<uint8_t>(rank | (static_cast<int>(suit) << 4) | (deck << 6))) {}

    int rank() const { return bits & 0x0f; }
    Suit suit() const { return static_cast<Suit>((bits >> 4) & 0x03); }
    int suit_index() const { return (bits >> 4) & 0x03; }
    int deck() const { return (bits >> 6) & 0x01; }
    bool empty() const { return bits == 0; }
    bool is_red() const { return suit() == Suit::Diamonds || suit() == Suit::Hearts; }

    bool operator==(const Card&) const = default;
};

inline constexpr char kRankChars[] = "xA23456789TJQK";
inline constexpr char kSuitChars[] = "CDHS";

inline std::string to_string(Card c) {
    if (c.empty()) return "--";
    return {kRankChars[c.rank()], kSuitChars[c.suit_index()]};
}

// Parses "AS", "TD", "KH", ...; deck index always 0.
inline Card card_from_string(const std::string& s) {
    if (s.size() != 2) throw std::invalid_argument("bad card: " + s);
    int rank = 0, suit = -1;
    for (int r = 1; r <= 13; ++r)
        if (kRankChars[r] == s[0]) rank = r;
    for (int i = 0; i < 4; ++i)
        if (kSuitChars[i] == s[1]) suit = i;
    if (rank == 0 || suit < 0) throw std::invalid_argument("bad card: " + s);
    return Card(rank, static_cast<Suit>(suit));
}

// The unshuffled pack: deck-major, then suit, then ascending rank.
inline std::vector<Card> canonical_pack(int max_rank, bool two_decks) {
    std::vector<Card> pack;
    pack.reserve(4 * max_rank * (two_decks ? 2 : 1));
    for (int deck = 0; deck < (two_decks ? 2 : 1); ++deck)
        for (int s = 0; s < 4; ++s)
            for (int r = 1; r <= max_rank; ++r)
                pack.push_back(Card(r, static_cast<Suit>(s), deck));
    return pack;
}

}  // namespace pats

#endif

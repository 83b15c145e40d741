#ifndef PATS_DEAL_HPP
#define PATS_DEAL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pats/cards.hpp"
#include "pats/rules.hpp"

namespace pats {

// Thin wrapper around the standard 32-bit Mersenne Twister.  The standard
// pins the generator's output sequence exactly, so deals are reproducible
// across platforms and standard libraries.
class Generator {
  public:
    explicit Generator(uint32_t seed) : engine_(seed) {}

    uint32_t next() { return engine_(); }

    // Uniform draw from [0, n) by rejection, so no modulo bias and no
    // dependence on library-specific distribution internals.
    uint32_t below(uint32_t n);

  private:
    std::mt19937 engine_;
};

// In-place Fisher-Yates from the top: position i swaps with a uniform
// draw from [0, i].
void shuffle(std::vector<Card>& cards, Generator& gen);

// A fully dealt initial position, before any moves.
struct Layout {
    std::vector<std::vector<Card>> tableau;  // index 0 = bottom of pile
    std::vector<int> face_down;              // per-pile face-down prefix length
    std::vector<Card> foundation_seeds;      // hole seed or initial foundation cards
    int base_rank = 1;                       // foundation base (hole base is rank 1)
    std::vector<Card> cells;                 // pre-filled cells only
    std::vector<Card> reserve;               // index 0 = bottom
    std::vector<Card> stock;                 // back() is the next card dealt

    bool operator==(const Layout&) const = default;
};

// Deterministic deal of a seeded shuffle.  Consumption order is fixed:
// foundation/hole seeds, pre-filled cells, reserve, tableau piles in
// order, remainder to stock.
Layout deal(const RuleSet& rules, uint32_t seed);

// Canonical JSON serialization; byte-identical for equal layouts.
std::string serialize_layout(const Layout& layout);
Layout parse_layout(const std::string& json_text);

}  // namespace pats

#endif

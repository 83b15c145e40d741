#ifndef PATS_SEARCH_HPP
#define PATS_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <list>
#include <string>
#include <unordered_map>
#include <vector>

#include "pats/dominance.hpp"
#include "pats/game.hpp"

namespace pats {

enum class Verdict : uint8_t { Winnable, Unwinnable, TimedOut, MemedOut };

const char* to_string(Verdict v);
bool is_unknown(Verdict v);

struct SearchLimits {
    double timeout_s = 0;       // 0 = unlimited
    uint64_t node_budget = 0;   // 0 = unlimited
    size_t cache_bytes = 256ull << 20;
};

// Transposition table over full canonical keys with LRU eviction.  Entries
// on the current search path are pinned and never evicted; when eviction is
// needed and every entry is pinned the search must give up (memed out).
class TranspositionTable {
  public:
    explicit TranspositionTable(size_t capacity_bytes) : capacity_(capacity_bytes) {}

    // True if the key is already known; refreshes its LRU position.
    bool contains(const std::string& key);

    enum class Insert { Ok, Full };
    // Records a newly visited state, pinned.  Evicts least-recently-used
    // unpinned entries as needed; Full when the key cannot fit.
    Insert insert_pinned(const std::string& key);

    enum class Probe { Present, Inserted, Full };
    // contains + insert_pinned in a single hash lookup: refreshes the LRU
    // position when the key is already known, inserts it pinned otherwise.
    Probe probe_pinned(const std::string& key);

    // Releases the pin when the search pops the state from its path.
    void unpin(const std::string& key);

    size_t bytes() const { return bytes_; }
    size_t peak_bytes() const { return peak_; }
    size_t size() const { return map_.size(); }
    uint64_t hits() const { return hits_; }

  private:
    struct Entry {
        bool pinned = false;
        std::list<const std::string*>::iterator lru;  // valid iff !pinned
    };
    size_t entry_cost(const std::string& key) const { return key.size() + kOverhead; }

    static constexpr size_t kOverhead = 64;  // node + bookkeeping estimate
    std::unordered_map<std::string, Entry> map_;
    std::list<const std::string*> lru_;  // front = most recently used
    size_t capacity_;
    size_t bytes_ = 0;
    size_t peak_ = 0;
    uint64_t hits_ = 0;
};

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t cache_hits = 0;
    size_t peak_cache_bytes = 0;
    int max_depth = 0;
    bool streamlined_phase_won = false;
    double elapsed_s = 0;
};

struct SearchResult {
    Verdict verdict = Verdict::Unwinnable;
    std::vector<Move> solution;  // filled when winnable
    SearchStats stats;
};

struct DfsOptions {
    DominanceConfig dominances;
    CanonMode canon = CanonMode::Game;
    // Streamliner: always commit the first available foundation/hole move.
    bool commit_foundation = false;
};

// Single-phase exhaustive depth-first search from the given position.
SearchResult dfs(const RuleSet& rules, const GameState& root, const DfsOptions& options,
                 const SearchLimits& limits);

enum class StreamlinerMode : uint8_t { Auto, On, Off };

struct SolveOptions {
    StreamlinerMode streamliners = StreamlinerMode::Auto;
    bool dominances = true;
    // Per-dominance forcing; unsound requests raise ConfigConflictError.
    std::optional<bool> safe_same_suit, safe_red_black, partial_pile;
    double phase1_fraction = 0.10;  // share of the budget given to phase 1
};

// Two-phase solve: a streamlined pass over a reduced move/state space first
// (its wins are verified before being reported), then the exhaustive
// search.  Unwinnable can only come from the exhaustive phase.
SearchResult solve(const RuleSet& rules, const Layout& layout, const SearchLimits& limits,
                   const SolveOptions& options = {});

// Replays a purported solution move by move, checking each against
// legal_moves; true iff all moves are legal and the final state is won.
// On failure *failed_index (if given) receives the offending move's index,
// or the move count when the replay ends short of a win.
bool verify_solution(const RuleSet& rules, const Layout& layout,
                     const std::vector<Move>& moves, size_t* failed_index = nullptr);

}  // namespace pats

#endif

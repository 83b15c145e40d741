#include "pats/search.hpp"

#include <algorithm>

namespace pats {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Winnable: return "winnable";
        case Verdict::Unwinnable: return "unwinnable";
        case Verdict::TimedOut: return "timed_out";
        case Verdict::MemedOut: return "memed_out";
    }
    return "?";
}

bool is_unknown(Verdict v) {
    return v == Verdict::TimedOut || v == Verdict::MemedOut;
}

bool TranspositionTable::contains(const std::string& key) {
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    ++hits_;
    if (!it->second.pinned && it->second.lru != lru_.begin())
        lru_.splice(lru_.begin(), lru_, it->second.lru);
    return true;
}

TranspositionTable::Insert TranspositionTable::insert_pinned(const std::string& key) {
    size_t cost = entry_cost(key);
    while (bytes_ + cost > capacity_ && !lru_.empty()) {
        const std::string* victim = lru_.back();
        bytes_ -= entry_cost(*victim);
        map_.erase(*victim);
        lru_.pop_back();
    }
    if (bytes_ + cost > capacity_) return Insert::Full;
    map_.emplace(key, Entry{true, lru_.end()});
    bytes_ += cost;
    peak_ = std::max(peak_, bytes_);
    return Insert::Ok;
}

TranspositionTable::Probe TranspositionTable::probe_pinned(const std::string& key) {
    auto [it, inserted] = map_.try_emplace(key, Entry{true, lru_.end()});
    if (!inserted) {
        ++hits_;
        if (!it->second.pinned && it->second.lru != lru_.begin())
            lru_.splice(lru_.begin(), lru_, it->second.lru);
        return Probe::Present;
    }
    size_t cost = entry_cost(key);
    while (bytes_ + cost > capacity_ && !lru_.empty()) {
        const std::string* victim = lru_.back();  // always unpinned, never `it`
        bytes_ -= entry_cost(*victim);
        map_.erase(*victim);
        lru_.pop_back();
    }
    if (bytes_ + cost > capacity_) {
        map_.erase(it);
        return Probe::Full;
    }
    bytes_ += cost;
    peak_ = std::max(peak_, bytes_);
    return Probe::Inserted;
}

void TranspositionTable::unpin(const std::string& key) {
    auto it = map_.find(key);
    if (it == map_.end() || !it->second.pinned) return;
    it->second.pinned = false;
    lru_.push_front(&it->first);
    it->second.lru = lru_.begin();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Frame {
    UndoToken undo;          // how this state was reached (unused at root)
    std::string key;         // canonical key, pinned while on the path
    std::vector<Move> moves; // filled on first visit
    size_t next = 0;
    bool visited = false;
};

// Index of the first foundation or hole move, or -1.
int first_foundation_move(const std::vector<Move>& moves) {
    for (size_t i = 0; i < moves.size(); ++i)
        if (moves[i].to == Zone::Foundation || moves[i].to == Zone::Hole)
            return static_cast<int>(i);
    return -1;
}

// Exploration order only; verdicts cannot depend on it.  Prefer moves that
// make progress (builds to the foundation, then tableau moves that turn up
// a face-down card) and leave stock cycling for last.
int move_priority(const GameState& s, const Move& m) {
    if (m.to == Zone::Foundation || m.to == Zone::Hole) return 0;
    if (m.from == Zone::Stock) return 4;
    if (m.from == Zone::Tableau) {
        const Pile& src = s.tableau[m.from_index];
        if (src.down > 0 && m.count == src.size() - src.down) return 1;
        if (m.to == Zone::Cell) return 3;
    }
    return 2;
}

void order_moves(const GameState& s, std::vector<Move>& moves) {
    std::stable_sort(moves.begin(), moves.end(), [&](const Move& a, const Move& b) {
        return move_priority(s, a) < move_priority(s, b);
    });
}

}  // namespace

SearchResult dfs(const RuleSet& rules, const GameState& root, const DfsOptions& options,
                 const SearchLimits& limits) {
    SearchResult result;
    GameState state = root;
    TranspositionTable table(limits.cache_bytes);
    Clock::time_point start = Clock::now();
    Clock::time_point deadline{};
    if (limits.timeout_s > 0)
        deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(limits.timeout_s));

    auto finish = [&](Verdict v) {
        result.verdict = v;
        result.stats.cache_hits = table.hits();
        result.stats.peak_cache_bytes = table.peak_bytes();
        result.stats.elapsed_s =
            std::chrono::duration<double>(Clock::now() - start).count();
        return result;
    };

    std::vector<Frame> stack;
    {
        Frame rootf;
        rootf.key = canonical_key(state, rules, options.canon);
        if (table.insert_pinned(rootf.key) == TranspositionTable::Insert::Full)
            return finish(Verdict::MemedOut);
        stack.push_back(std::move(rootf));
    }
    result.stats.nodes = 1;

    uint64_t tick = 0;
    while (!stack.empty()) {
        if (limits.node_budget && result.stats.nodes >= limits.node_budget)
            return finish(Verdict::TimedOut);
        if (limits.timeout_s > 0 && (++tick & 0x3ff) == 0 && Clock::now() >= deadline)
            return finish(Verdict::TimedOut);

        Frame& frame = stack.back();
        if (!frame.visited) {
            frame.visited = true;
            result.stats.max_depth =
                std::max(result.stats.max_depth, static_cast<int>(stack.size()) - 1);
            if (is_won(state)) {
                for (size_t i = 1; i < stack.size(); ++i)
                    result.solution.push_back(stack[i].undo.move);
                return finish(Verdict::Winnable);
            }
            frame.moves = legal_moves(state, rules);
            if (options.dominances.partial_pile)
                filter_partial_pile_moves(state, rules, frame.moves);
            order_moves(state, frame.moves);
            if (auto safe = safe_foundation_move(state, rules, options.dominances,
                                                 frame.moves)) {
                frame.moves = {*safe};
            } else if (options.commit_foundation) {
                if (int i = first_foundation_move(frame.moves); i >= 0)
                    frame.moves = {frame.moves[i]};
            }
        }

        if (frame.next < frame.moves.size()) {
            Move m = frame.moves[frame.next++];
            Frame child;
            child.undo = apply(state, rules, m);
            child.key = canonical_key(state, rules, options.canon);
            switch (table.probe_pinned(child.key)) {
                case TranspositionTable::Probe::Present:
                    undo(state, rules, child.undo);
                    continue;
                case TranspositionTable::Probe::Full:
                    undo(state, rules, child.undo);
                    return finish(Verdict::MemedOut);
                case TranspositionTable::Probe::Inserted: break;
            }
            ++result.stats.nodes;
            stack.push_back(std::move(child));
        } else {
            table.unpin(frame.key);
            if (stack.size() > 1) undo(state, rules, frame.undo);
            stack.pop_back();
        }
    }
    return finish(Verdict::Unwinnable);
}

namespace {

DominanceConfig resolve_dominances(const RuleSet& rules, const SolveOptions& opts) {
    DominanceConfig cfg =
        opts.dominances ? applicable_dominances(rules) : DominanceConfig{};
    if (opts.safe_same_suit) cfg.safe_same_suit = *opts.safe_same_suit;
    if (opts.safe_red_black) cfg.safe_red_black = *opts.safe_red_black;
    if (opts.partial_pile) cfg.partial_pile = *opts.partial_pile;
    check_dominances(rules, cfg);
    return cfg;
}

}  // namespace

SearchResult solve(const RuleSet& rules, const Layout& layout, const SearchLimits& limits,
                   const SolveOptions& options) {
    GameState root = initial_state(rules, layout);
    DominanceConfig dom = resolve_dominances(rules, options);

    bool color_merge = options.streamliners != StreamlinerMode::Off &&
                       rules.build == BuildPolicy::RedBlack && !rules.two_decks &&
                       !suit_indifferent(rules);
    bool commit = options.streamliners != StreamlinerMode::Off &&
                  (rules.foundations_present || rules.hole);
    bool phase1 = (options.streamliners == StreamlinerMode::On ||
                   options.streamliners == StreamlinerMode::Auto) &&
                  (color_merge || commit);

    Clock::time_point start = Clock::now();
    SearchStats accumulated;

    if (phase1) {
        SearchLimits lim1 = limits;
        if (limits.timeout_s > 0) lim1.timeout_s = limits.timeout_s * options.phase1_fraction;
        if (limits.node_budget > 0)
            lim1.node_budget = std::max<uint64_t>(
                1, static_cast<uint64_t>(limits.node_budget * options.phase1_fraction));
        DfsOptions d1{dom, color_merge ? CanonMode::ColorStreamliner : CanonMode::Game,
                      commit};
        SearchResult r1 = dfs(rules, root, d1, lim1);
        accumulated = r1.stats;
        if (r1.verdict == Verdict::Winnable && verify_solution(rules, layout, r1.solution)) {
            r1.stats.streamlined_phase_won = true;
            return r1;
        }
        // Any other phase-1 outcome (including a streamlined "unwinnable",
        // which only means the reduced space is exhausted) falls through to
        // the exhaustive search.
    }

    SearchLimits lim2 = limits;
    if (limits.timeout_s > 0) {
        double used = std::chrono::duration<double>(Clock::now() - start).count();
        lim2.timeout_s = std::max(0.001, limits.timeout_s - used);
    }
    if (limits.node_budget > 0) {
        uint64_t used = accumulated.nodes;
        lim2.node_budget = used >= limits.node_budget ? 1 : limits.node_budget - used;
    }
    SearchResult r2 = dfs(rules, root, DfsOptions{dom, CanonMode::Game, false}, lim2);
    r2.stats.nodes += accumulated.nodes;
    r2.stats.cache_hits += accumulated.cache_hits;
    r2.stats.peak_cache_bytes =
        std::max(r2.stats.peak_cache_bytes, accumulated.peak_cache_bytes);
    r2.stats.max_depth = std::max(r2.stats.max_depth, accumulated.max_depth);
    // Sum the phases' in-search times; table teardown is not search time.
    r2.stats.elapsed_s += accumulated.elapsed_s;
    return r2;
}

bool verify_solution(const RuleSet& rules, const Layout& layout,
                     const std::vector<Move>& moves, size_t* failed_index) {
    GameState state = initial_state(rules, layout);
    for (size_t i = 0; i < moves.size(); ++i) {
        auto legal = legal_moves(state, rules);
        if (std::find(legal.begin(), legal.end(), moves[i]) == legal.end()) {
            if (failed_index) *failed_index = i;
            return false;
        }
        apply(state, rules, moves[i]);
    }
    if (!is_won(state)) {
        if (failed_index) *failed_index = moves.size();
        return false;
    }
    return true;
}

}  // namespace pats

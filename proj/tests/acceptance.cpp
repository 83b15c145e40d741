// End-to-end acceptance checks.  Each numbered criterion prints exactly one
// PASS/FAIL line on stdout; progress goes to stderr.  The process exits
// non-zero if any criterion fails.

#include <algorithm>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pats/deal.hpp"
#include "pats/game.hpp"
#include "pats/rules.hpp"
#include "pats/search.hpp"
#include "pats/stats.hpp"

namespace fs = std::filesystem;
using namespace pats;

namespace {

const std::string kRoot = PATS_SOURCE_DIR;
const std::string kGames = kRoot + "/games/";
const std::string kMini = kRoot + "/tests/data/mini/";
const std::string kFixtures = kRoot + "/tests/data/fixtures/";

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Verification tally shared by every criterion that produces verdicts.
struct Soundness {
    uint64_t wins = 0;
    uint64_t wins_verified = 0;
    uint64_t streamliner_wins = 0;
    uint64_t streamliner_wins_verified = 0;
};

Soundness g_sound;

// Solves one deal and folds any Winnable result into the soundness tally.
SearchResult checked_solve(const RuleSet& rules, const Layout& lay, const SearchLimits& lim,
                           const SolveOptions& opt = {}) {
    SearchResult r = solve(rules, lay, lim, opt);
    if (r.verdict == Verdict::Winnable) {
        g_sound.wins++;
        bool ok = verify_solution(rules, lay, r.solution);
        if (ok) g_sound.wins_verified++;
        if (r.stats.streamlined_phase_won) {
            g_sound.streamliner_wins++;
            if (ok) g_sound.streamliner_wins_verified++;
        }
    }
    return r;
}

struct Criterion {
    bool pass;
    std::string detail;
};

void report(int number, const Criterion& c, int& failures) {
    std::printf("criterion %d: %s - %s\n", number, c.pass ? "PASS" : "FAIL", c.detail.c_str());
    std::fflush(stdout);
    if (!c.pass) failures++;
}

// ---- 1. Interval display fixtures --------------------------------------
//
// Frozen batch tallies and the interval strings they are recorded with.
// Seven of the tallies are inconsistent with their own recorded strings;
// the strings are preserved verbatim and reported as failures rather than
// silently corrected.

struct DisplayRow {
    const char* label;
    bool pm;  // false: range form
    int digits;
    uint64_t n, wins, unknowns;
    const char* expect;
};

const DisplayRow kRows[] = {
    // single-game reference tallies
    {"Accordion", true, 5, 1000000, 999996, 4, "99.99948% ± 0.00052%"},
    {"Accordion 18", true, 3, 10000000, 4702154, 0, "47.021% ± 0.032%"},
    {"Baker's Game", true, 3, 10000000, 7505266, 0, "75.053% ± 0.028%"},
    {"Black Hole", true, 3, 10000000, 8694457, 0, "86.944% ± 0.022%"},
    {"Canfield", true, 3, 1000000, 706711, 62, "70.674% ± 0.093%"},
    {"Fore Cell", true, 3, 10000000, 8561569, 349, "85.617% ± 0.024%"},
    {"Freecell", true, 5, 10000000, 9999890, 0, "99.99888% ± 0.00021%"},
    {"Gaps Basic", true, 3, 1000000, 249083, 0, "24.918% ± 0.086%"},
    {"Gaps One deal", false, 2, 2500, 2069, 159, "81.22-90.29%"},
    {"Klondike", true, 3, 1000000, 819363, 396, "81.956% ± 0.096%"},
    {"Simple Simon", false, 2, 1000000, 974476, 57, "97.41-97.49%"},
    {"Spider", false, 3, 10000, 9782, 218, "97.514-100%"},
    {"Thirty Six", true, 3, 1000000, 946196, 1100, "94.674% ± 0.100%"},
    {"Trigon", false, 2, 10000000, 1599605, 0, "15.97-16.02%"},
    // cell/pile-count variants
    {"0C/8P Freecell", true, 3, 10000000, 21354, 29, "0.214% ± 0.004%"},
    {"1C/8P Freecell", true, 3, 1000000, 193335, 295, "19.348% ± 0.093%"},
    {"2C/8P Freecell", true, 3, 1000000, 795341, 210, "79.544% ± 0.091%"},
    {"3C/8P Freecell", true, 3, 1000000, 993580, 10, "99.358% ± 0.017%"},
    {"4C/7P Freecell", true, 3, 1000000, 988556, 27, "98.857% ± 0.023%"},
    {"4C/6P Freecell", true, 3, 2000000, 1227828, 1190, "61.421% ± 0.098%"},
    {"4C/5P Freecell", true, 3, 1000000, 38577, 31, "3.859% ± 0.040%"},
    {"4C/4P Freecell", true, 5, 10000000, 864, 0, "0.00866% ± 0.00058%"},
    // wider corpus tallies
    {"Alpha Star", true, 3, 10000000, 4779474, 0, "47.795% ± 0.032%"},
    {"American Canister", true, 3, 10000000, 560567, 5, "5.606% ± 0.015%"},
    {"Beleaguered Castle", true, 3, 2000000, 1362720, 1361, "68.170% ± 0.099%"},
    {"British Canister", true, 6, 1000000000, 1290, 0, "0.000129% ± 0.000008%"},
    {"Canfield whole-pile", true, 3, 1000000, 670152, 88, "67.020% ± 0.099%"},
    {"Delta Star", true, 3, 10000000, 3441247, 0, "34.414% ± 0.031%"},
    {"East Haven", true, 3, 2000000, 1655944, 1887, "82.844% ± 0.100%"},
    {"Eight Off", true, 3, 10000000, 9988054, 0, "99.880% ± 0.003%"},
    {"Fan", true, 3, 1000000, 487759, 0, "48.776% ± 0.099%"},
    {"Fore Cell Same Suit", true, 3, 10000000, 1056397, 0, "10.564% ± 0.020%"},
    {"Fortune's Favor", true, 7, 1000000000, 999999881, 0, "99.9999879% ± 0.0000022%"},
    {"King Albert", true, 3, 2000000, 1370321, 1061, "68.542% ± 0.092%"},
    {"Mrs Mop", true, 3, 2000000, 1958661, 2370, "97.992% ± 0.079%"},
    {"Northwest Territory", true, 3, 1000000, 683669, 44, "68.369% ± 0.094%"},
    {"Raglan", true, 3, 1000000, 812184, 166, "81.226% ± 0.085%"},
    {"Seahaven Towers", true, 3, 1000000, 976774, 0, "97.677% ± 0.030%"},
    {"Siegecraft", true, 3, 1000000, 991378, 27, "99.136% ± 0.020%"},
    {"Somerset", true, 3, 2000000, 1073962, 1070, "53.725% ± 0.097%"},
    {"Spanish Patience", true, 3, 10000000, 9986239, 15, "99.863% ± 0.003%"},
    {"Spiderette", true, 3, 1000000, 996153, 96, "99.620% ± 0.018%"},
    {"Streets and Alleys", true, 3, 2000000, 1021425, 4642, "51.187% ± 0.186%"},
    {"Stronghold", true, 3, 1000000, 973689, 205, "97.379% ± 0.042%"},
    {"Thirty", true, 3, 10000000, 6745425, 67, "67.454% ± 0.030%"},
    {"Will O' The Wisp", true, 4, 10000000, 9992300, 213, "99.9240% ± 0.0027%"},
    {"Worm Hole", true, 4, 1000000, 998881, 15, "99.8886% ± 0.0074%"},
};

Criterion criterion1() {
    int total = 0, exact = 0;
    std::string mismatches;
    for (const DisplayRow& row : kRows) {
        total++;
        SampleSummary s;
        s.n = row.n;
        s.wins = row.wins;
        s.unknowns = row.unknowns;
        s.losses = row.n - row.wins - row.unknowns;
        Interval iv = conservative_interval(s);
        std::string got = row.pm ? display_pm(iv, row.digits) : display_range(iv, row.digits);
        if (got == row.expect) {
            exact++;
        } else {
            if (!mismatches.empty()) mismatches += ", ";
            mismatches += row.label;
            mismatches += " (got \"" + got + "\", recorded \"" + row.expect + "\")";
        }
    }
    std::string detail = "interval display fixtures: " + std::to_string(exact) + "/" +
                         std::to_string(total) + " string-exact";
    if (!mismatches.empty()) detail += "; mismatches: " + mismatches;
    return {exact == total, detail};
}

// ---- 2/3. Full-deck winnability batches ---------------------------------

struct BatchOutcome {
    SampleSummary tally;
    double elapsed_s = 0;
};

BatchOutcome solve_seed_range(const RuleSet& rules, const char* name, uint32_t first,
                              uint32_t count, const SearchLimits& lim,
                              const SolveOptions& opt = {}) {
    BatchOutcome out;
    auto start = std::chrono::steady_clock::now();
    for (uint32_t seed = first; seed < first + count; ++seed) {
        Layout lay = deal(rules, seed);
        SearchResult r = checked_solve(rules, lay, lim, opt);
        out.tally.n++;
        if (r.verdict == Verdict::Winnable)
            out.tally.wins++;
        else if (r.verdict == Verdict::Unwinnable)
            out.tally.losses++;
        else
            out.tally.unknowns++;
        if (seed % 25 == 0 || seed == first + count - 1) {
            std::fprintf(stderr, "  [%s] seed %u/%u  +%" PRIu64 " -%" PRIu64 " ?%" PRIu64 "\n",
                         name, seed, first + count - 1, out.tally.wins, out.tally.losses,
                         out.tally.unknowns);
        }
    }
    out.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

Criterion criterion2() {
    RuleSet rules = load_rules_file(kGames + "black_hole.json");
    SearchLimits lim;
    lim.timeout_s = 240;
    lim.cache_bytes = 512ull << 20;
    BatchOutcome out = solve_seed_range(rules, "black hole", 1, 1000, lim);
    Interval iv = conservative_interval(out.tally);
    bool unknown_ok = out.tally.unknowns * 100 <= out.tally.n;  // <= 1%
    bool intersects = iv.lo <= 0.871L && iv.hi >= 0.868L;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "black hole 1000 seeds: %s, unknowns %" PRIu64 "/1000, %.0f s",
                  display_pm(iv, 3).c_str(), out.tally.unknowns, out.elapsed_s);
    return {unknown_ok && intersects, buf};
}

Criterion criterion3() {
    RuleSet rules = load_rules_file(kGames + "klondike.json");
    SearchLimits lim;
    lim.timeout_s = 60;
    lim.cache_bytes = 2ull << 30;
    // A third of the budget goes to the streamlined phase: most winnable
    // deals fall to it quickly, and when it exhausts its reduced space it
    // hands the unused time to the exhaustive phase.
    SolveOptions opt;
    opt.phase1_fraction = 0.30;
    BatchOutcome out = solve_seed_range(rules, "klondike", 1, 200, lim, opt);
    Interval iv = conservative_interval(out.tally);
    bool unknown_ok = out.tally.unknowns * 10 <= out.tally.n;  // <= 10%
    bool intersects = iv.lo <= 0.8206L && iv.hi >= 0.8186L;
    bool in_budget = out.elapsed_s < 4 * 3600;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "klondike 200 seeds @ 60 s/2 GiB: %s, unknowns %" PRIu64 "/200, %.0f s",
                  display_pm(iv, 3).c_str(), out.tally.unknowns, out.elapsed_s);
    return {unknown_ok && intersects && in_budget, buf};
}

// ---- 4. Partial-built-group restriction is verdict-preserving -----------

std::string reduced_klondike_rules(int max_rank) {
    return "{\"tableau piles\": {\"count\": 4, \"build policy\": \"red-black\","
           " \"spaces policy\": \"kings\","
           " \"move built group\": \"partial-if-card-above-buildable\","
           " \"diagonal deal\": true, \"face up cards\": \"top\"},"
           " \"foundations\": {\"removable\": true},"
           " \"stock\": {\"size\": " + std::to_string(4 * max_rank - 10) +
           ", \"deal count\": 3, \"redeal\": true},"
           " \"max rank\": " + std::to_string(max_rank) + "}";
}

std::string reduced_canfield_rules(int max_rank) {
    return "{\"tableau piles\": {\"count\": 4, \"build policy\": \"red-black\","
           " \"spaces policy\": \"auto-from-reserve\","
           " \"move built group\": \"partial-if-card-above-buildable\"},"
           " \"foundations\": {\"initial cards\": \"one\", \"base card\": \"random\","
           " \"removable\": true},"
           " \"stock\": {\"size\": " + std::to_string(4 * max_rank - 10) +
           ", \"deal count\": 3, \"redeal\": true},"
           " \"reserve\": {\"size\": 5, \"stacked\": true},"
           " \"max rank\": " + std::to_string(max_rank) + "}";
}

Criterion criterion4() {
    SearchLimits lim;
    lim.timeout_s = 120;
    lim.cache_bytes = 256ull << 20;
    uint64_t checked = 0, mismatched = 0, undecided = 0;
    std::string first_bad;
    for (int family = 0; family < 2; ++family) {
        for (int m : {5, 6, 7}) {
            std::string text = family == 0 ? reduced_klondike_rules(m) : reduced_canfield_rules(m);
            RuleSet rules = parse_rules(text);
            for (uint32_t seed = 1; seed <= 1000; ++seed) {
                Layout lay = deal(rules, seed);
                SolveOptions with, without;
                with.partial_pile = true;
                without.partial_pile = false;
                Verdict a = checked_solve(rules, lay, lim, with).verdict;
                Verdict b = checked_solve(rules, lay, lim, without).verdict;
                checked++;
                if (is_unknown(a) || is_unknown(b)) {
                    undecided++;
                } else if (a != b) {
                    mismatched++;
                    if (first_bad.empty())
                        first_bad = std::string(family == 0 ? "klondike" : "canfield") + " m" +
                                    std::to_string(m) + " seed " + std::to_string(seed);
                }
            }
            std::fprintf(stderr, "  [restriction] %s m=%d done (%" PRIu64 " deals so far)\n",
                         family == 0 ? "klondike" : "canfield", m, checked);
        }
    }
    std::string detail = "partial-pile restriction on/off: " + std::to_string(checked) +
                         " deals, " + std::to_string(mismatched) + " verdict mismatches, " +
                         std::to_string(undecided) + " undecided";
    if (!first_bad.empty()) detail += "; first mismatch at " + first_bad;
    return {mismatched == 0 && undecided == 0, detail};
}

// ---- 5. Solver agrees with the brute-force oracle ------------------------

Criterion criterion5() {
    SearchLimits lim;
    lim.timeout_s = 120;
    lim.cache_bytes = 128ull << 20;
    uint64_t checked = 0, mismatched = 0, inconclusive = 0;
    int games = 0;
    std::string first_bad;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(kMini)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) {
        RuleSet rules = parse_rules(slurp(f.string()));
        if (!rules.foundations_present && !rules.hole) continue;
        games++;
        for (uint32_t seed = 1; seed <= 200; ++seed) {
            Layout lay = deal(rules, seed);
            Verdict v = checked_solve(rules, lay, lim).verdict;
            testing::OracleResult o = testing::oracle_solve(rules, lay);
            checked++;
            if (is_unknown(v) || (!o.winnable && !o.exhausted)) {
                inconclusive++;
                continue;
            }
            bool solver_win = v == Verdict::Winnable;
            if (solver_win != o.winnable) {
                mismatched++;
                if (first_bad.empty())
                    first_bad = f.stem().string() + " seed " + std::to_string(seed);
            }
        }
        std::fprintf(stderr, "  [oracle] %s done (%" PRIu64 " deals so far)\n",
                     f.stem().string().c_str(), checked);
    }
    std::string detail = "oracle agreement: " + std::to_string(games) + " games x 200 deals, " +
                         std::to_string(mismatched) + " discrepancies, " +
                         std::to_string(inconclusive) + " inconclusive";
    if (!first_bad.empty()) detail += "; first discrepancy at " + first_bad;
    return {mismatched == 0 && inconclusive == 0, detail};
}

// ---- 7. Regression fixtures ----------------------------------------------

Criterion criterion7() {
    SearchLimits lim;
    lim.timeout_s = 60;

    RuleSet worry_rules = parse_rules(slurp(kFixtures + "worry_back_rules.json"));
    Layout worry = parse_layout(slurp(kFixtures + "worry_back_layout.json"));
    Verdict a = checked_solve(worry_rules, worry, lim).verdict;

    RuleSet canfield = load_rules_file(kGames + "canfield.json");
    Layout stock_fix = parse_layout(slurp(kFixtures + "canfield_stock_layout.json"));
    Verdict b = checked_solve(canfield, stock_fix, lim).verdict;

    std::string detail = std::string("worry-back fixture ") + to_string(a) +
                         ", canfield stock fixture " + to_string(b);
    return {a == Verdict::Winnable && b == Verdict::Winnable, detail};
}

// ---- 8. Cache-size independence ------------------------------------------

Criterion criterion8() {
    RuleSet rules = load_rules_file(kMini + "klondike.json");
    SearchLimits small, large;
    small.timeout_s = large.timeout_s = 120;
    small.cache_bytes = 1ull << 20;
    large.cache_bytes = 1ull << 30;
    uint64_t checked = 0, mismatched = 0;
    std::string first_bad;
    for (uint32_t seed = 1; seed <= 200; ++seed) {
        Layout lay = deal(rules, seed);
        Verdict a = checked_solve(rules, lay, small).verdict;
        Verdict b = checked_solve(rules, lay, large).verdict;
        checked++;
        if (a != b) {
            mismatched++;
            if (first_bad.empty()) first_bad = "seed " + std::to_string(seed);
        }
    }

    // With a table too small to hold even the search path, every entry is a
    // pinned ancestor; the only sound outcome is MemedOut.
    RuleSet klondike = load_rules_file(kGames + "klondike.json");
    SearchLimits tiny;
    tiny.cache_bytes = 512;
    Verdict pinned = solve(klondike, deal(klondike, 1), tiny).verdict;

    std::string detail = "1 MiB vs 1 GiB verdicts: " + std::to_string(mismatched) + "/" +
                         std::to_string(checked) + " mismatches; all-ancestors table: " +
                         to_string(pinned);
    if (!first_bad.empty()) detail += "; first mismatch at " + first_bad;
    return {mismatched == 0 && pinned == Verdict::MemedOut, detail};
}

// ---- 9. Deal portability digest -------------------------------------------

// FNV-1a 64 over the layout serializations of the first 1,000 (game, seed)
// pairs, iterating seeds outermost and the sorted rules corpus innermost.
// The frozen constant was produced by an independent build (different
// compiler and optimization level); matching it means every one of the
// 1,000 serializations is byte-identical across the two builds.
constexpr uint64_t kExpectedDigest = 0x80868abf4aae2286ull;

Criterion criterion9() {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(kGames)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<RuleSet> rules;
    for (const fs::path& f : files) rules.push_back(load_rules_file(f.string()));

    uint64_t digest = 1469598103934665603ull;
    int pairs = 0;
    for (uint32_t seed = 1; pairs < 1000; ++seed) {
        for (const RuleSet& r : rules) {
            if (pairs >= 1000) break;
            std::string text = serialize_layout(deal(r, seed));
            for (unsigned char c : text) {
                digest ^= c;
                digest *= 1099511628211ull;
            }
            pairs++;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "layout digest over %d pairs: %016" PRIx64 " (frozen %016" PRIx64 ")",
                  pairs, digest, kExpectedDigest);
    return {digest == kExpectedDigest, buf};
}

}  // namespace

int main() {
    int failures = 0;

    std::fprintf(stderr, "running criterion 1 (interval display fixtures)...\n");
    Criterion c1 = criterion1();

    std::fprintf(stderr, "running criterion 9 (deal portability digest)...\n");
    Criterion c9 = criterion9();

    std::fprintf(stderr, "running criterion 7 (regression fixtures)...\n");
    Criterion c7 = criterion7();

    std::fprintf(stderr, "running criterion 8 (cache-size independence)...\n");
    Criterion c8 = criterion8();

    std::fprintf(stderr, "running criterion 4 (partial-pile restriction)...\n");
    Criterion c4 = criterion4();

    std::fprintf(stderr, "running criterion 5 (oracle agreement)...\n");
    Criterion c5 = criterion5();

    std::fprintf(stderr, "running criterion 2 (black hole batch)...\n");
    Criterion c2 = criterion2();

    std::fprintf(stderr, "running criterion 3 (klondike batch)...\n");
    Criterion c3 = criterion3();

    // 6. Every Winnable verdict produced above must have replayed cleanly,
    // including wins found by the streamlined first phase.
    char buf6[200];
    std::snprintf(buf6, sizeof buf6,
                  "solution verification: %" PRIu64 "/%" PRIu64 " wins verified, %" PRIu64
                  "/%" PRIu64 " streamlined-phase wins verified",
                  g_sound.wins_verified, g_sound.wins, g_sound.streamliner_wins_verified,
                  g_sound.streamliner_wins);
    Criterion c6{g_sound.wins > 0 && g_sound.wins_verified == g_sound.wins &&
                     g_sound.streamliner_wins_verified == g_sound.streamliner_wins,
                 buf6};

    report(1, c1, failures);
    report(2, c2, failures);
    report(3, c3, failures);
    report(4, c4, failures);
    report(5, c5, failures);
    report(6, c6, failures);
    report(7, c7, failures);
    report(8, c8, failures);
    report(9, c9, failures);
    return failures == 0 ? 0 : 1;
}

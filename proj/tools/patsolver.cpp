// Command-line driver: deal and solve instances of a JSON-described
// patience game, or summarize a previously produced NDJSON record stream.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pats/harness.hpp"

using namespace pats;

namespace {

constexpr int kUsageError = 64;

int run(int argc, char** argv) {
    CLI::App app{"patsolver: exhaustive solver for patience/solitaire games"};

    std::string rules_path, out_path, summarize_path, solution_path;
    uint32_t seed = 1, count = 1;
    double timeout_s = 0;
    uint64_t node_budget = 0;
    uint64_t cache_bytes = 256ull << 20;
    std::string streamliners = "auto";
    bool no_dominances = false;
    std::vector<std::string> dominance_flags;
    int jobs = 1, digits = 3;
    bool show_deal = false, show_state = false;

    app.add_option("--rules", rules_path, "JSON rule description file");
    app.add_option("--seed", seed, "first deal seed (default 1)");
    app.add_option("--count", count, "number of consecutive seeds (default 1)");
    app.add_option("--timeout-s", timeout_s, "per-instance time budget in seconds");
    app.add_option("--node-budget", node_budget, "per-instance search node budget");
    app.add_option("--cache-bytes", cache_bytes,
                   "transposition table budget in bytes (default 256 MiB)");
    app.add_option("--streamliners", streamliners, "auto|on|off (default auto)")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    app.add_flag("--no-dominances", no_dominances, "disable all dominance prunings");
    app.add_option("--dominance", dominance_flags,
                   "force one pruning, e.g. safe-red-black=off "
                   "(safe-same-suit|safe-red-black|partial-pile)");
    app.add_option("--jobs", jobs, "worker threads for batches (default 1)");
    app.add_option("--out", out_path, "write NDJSON records here instead of stdout");
    app.add_flag("--show-deal", show_deal, "embed the dealt layout in each record");
    app.add_flag("--show-state", show_state, "print the initial board, then exit");
    app.add_option("--solution", solution_path,
                   "write the winning move list of a single instance here");
    app.add_option("--summarize", summarize_path,
                   "summarize an NDJSON record file ('-' for stdin) and exit");
    app.add_option("--digits", digits, "decimal places in interval displays");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    if (!summarize_path.empty()) {
        SampleSummary tally;
        if (summarize_path == "-") {
            tally = summarize_records(std::cin);
        } else {
            std::ifstream in(summarize_path);
            if (!in) {
                std::cerr << "cannot open " << summarize_path << "\n";
                return kUsageError;
            }
            tally = summarize_records(in);
        }
        std::cout << summary_json(tally, digits) << "\n";
        return 0;
    }

    if (rules_path.empty()) {
        std::cerr << "either --rules or --summarize is required\n";
        return kUsageError;
    }
    RuleSet rules = load_rules_file(rules_path);

    SolveOptions options;
    if (streamliners == "on") options.streamliners = StreamlinerMode::On;
    if (streamliners == "off") options.streamliners = StreamlinerMode::Off;
    options.dominances = !no_dominances;
    for (const std::string& flag : dominance_flags) {
        auto eq = flag.find('=');
        std::string name = flag.substr(0, eq);
        bool on = eq != std::string::npos && flag.substr(eq + 1) == "on";
        if (eq != std::string::npos && flag.substr(eq + 1) != "on" &&
            flag.substr(eq + 1) != "off") {
            std::cerr << "bad --dominance value: " << flag << "\n";
            return kUsageError;
        }
        if (name == "safe-same-suit") options.safe_same_suit = on;
        else if (name == "safe-red-black") options.safe_red_black = on;
        else if (name == "partial-pile") options.partial_pile = on;
        else {
            std::cerr << "unknown dominance: " << name << "\n";
            return kUsageError;
        }
    }

    SearchLimits limits;
    limits.timeout_s = timeout_s;
    limits.node_budget = node_budget;
    limits.cache_bytes = cache_bytes;

    if (show_state) {
        Layout layout = deal(rules, seed);
        std::cout << dump_state(initial_state(rules, layout), rules);
        return 0;
    }

    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return kUsageError;
        }
        out = &out_file;
    }

    if (count == 1) {
        Layout layout = deal(rules, seed);
        SearchResult result = solve(rules, layout, limits, options);
        *out << instance_record(rules_path, seed, rules, layout, result,
                                !solution_path.empty() || result.verdict == Verdict::Winnable,
                                show_deal)
             << "\n";
        if (!solution_path.empty() && result.verdict == Verdict::Winnable) {
            std::ofstream sol(solution_path);
            for (const Move& m : result.solution) sol << to_string(m) << "\n";
        }
        switch (result.verdict) {
            case Verdict::Winnable: return 0;
            case Verdict::Unwinnable: return 1;
            default: return 2;
        }
    }

    BatchOptions batch;
    batch.first_seed = seed;
    batch.count = count;
    batch.jobs = jobs;
    batch.with_deal = show_deal;
    SampleSummary tally = run_batch(rules, rules_path, limits, options, batch, *out);
    std::cerr << summary_json(tally, digits) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

#include "pats/harness.hpp"

#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

namespace pats {

using ordered_json = nlohmann::ordered_json;

std::string instance_record(const std::string& game, uint32_t seed, const RuleSet& rules,
                            const Layout& layout, const SearchResult& result,
                            bool with_solution, bool with_deal) {
    ordered_json rec;
    rec["game"] = game;
    rec["seed"] = seed;
    rec["verdict"] = to_string(result.verdict);
    rec["nodes"] = result.stats.nodes;
    rec["elapsed_s"] = result.stats.elapsed_s;
    rec["peak_cache_bytes"] = result.stats.peak_cache_bytes;
    rec["max_depth"] = result.stats.max_depth;
    rec["streamlined"] = result.stats.streamlined_phase_won;
    if (with_solution && result.verdict == Verdict::Winnable) {
        ordered_json moves = ordered_json::array();
        for (const Move& m : result.solution) moves.push_back(to_string(m));
        rec["solution"] = moves;
    }
    if (with_deal) rec["deal"] = nlohmann::json::parse(serialize_layout(layout));
    (void)rules;
    return rec.dump();
}

SampleSummary run_batch(const RuleSet& rules, const std::string& game,
                        const SearchLimits& limits, const SolveOptions& solve_options,
                        const BatchOptions& batch, std::ostream& out) {
    SampleSummary tally;
    tally.n = batch.count;

    std::mutex mu;
    std::condition_variable cv;
    std::map<uint32_t, std::pair<Verdict, std::string>> pending;  // index -> record
    uint32_t next_index = 0, next_write = 0;

    auto worker = [&]() {
        for (;;) {
            uint32_t index;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next_index >= batch.count) return;
                index = next_index++;
            }
            uint32_t seed = batch.first_seed + index;
            Layout layout = deal(rules, seed);
            SearchResult result = solve(rules, layout, limits, solve_options);
            std::string record = instance_record(game, seed, rules, layout, result,
                                                 batch.with_solution, batch.with_deal);
            {
                std::lock_guard<std::mutex> lock(mu);
                pending.emplace(index, std::make_pair(result.verdict, std::move(record)));
            }
            cv.notify_one();
        }
    };

    int jobs = std::max(1, batch.jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);

    {
        std::unique_lock<std::mutex> lock(mu);
        while (next_write < batch.count) {
            cv.wait(lock, [&] { return pending.count(next_write) > 0; });
            while (pending.count(next_write)) {
                auto& [verdict, record] = pending.at(next_write);
                switch (verdict) {
                    case Verdict::Winnable: ++tally.wins; break;
                    case Verdict::Unwinnable: ++tally.losses; break;
                    default: ++tally.unknowns; break;
                }
                out << record << '\n';
                pending.erase(next_write++);
            }
        }
    }
    for (auto& t : threads) t.join();
    out.flush();
    return tally;
}

SampleSummary summarize_records(std::istream& in) {
    SampleSummary tally;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw MalformedRecordError("line " + std::to_string(line_no) +
                                       ": not valid JSON: " + e.what());
        }
        if (!rec.is_object() || !rec.contains("verdict") || !rec["verdict"].is_string())
            throw MalformedRecordError("line " + std::to_string(line_no) +
                                       ": record has no verdict");
        std::string v = rec["verdict"].get<std::string>();
        ++tally.n;
        if (v == "winnable") ++tally.wins;
        else if (v == "unwinnable") ++tally.losses;
        else if (v == "timed_out" || v == "memed_out") ++tally.unknowns;
        else
            throw MalformedRecordError("line " + std::to_string(line_no) +
                                       ": unknown verdict \"" + v + "\"");
    }
    return tally;
}

std::string summary_json(const SampleSummary& s, int digits) {
    Interval iv = conservative_interval(s);
    ordered_json doc;
    doc["instances"] = s.n;
    doc["winnable"] = s.wins;
    doc["unwinnable"] = s.losses;
    doc["unknown"] = s.unknowns;
    doc["interval lo"] = static_cast<double>(iv.lo);
    doc["interval hi"] = static_cast<double>(iv.hi);
    doc["interval"] = display_pm(iv, digits);
    doc["interval range"] = display_range(iv, digits);
    return doc.dump();
}

}  // namespace pats

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxdom/cells.hpp"
#include "boxdom/graph.hpp"
#include "boxdom/hypothesis.hpp"

namespace boxdom {

// JSON forms shared by the sweep report and the inspection subcommands.
nlohmann::ordered_json hypothesis_flags_json(const HypothesisReport& hyp);
nlohmann::ordered_json cs_outcome_json(const CSOutcome& outcome, int bases_checked);

// Everything a sweep or hunt needs to run.  Parsed from line-oriented
// key=value text or a single JSON object with the same keys.
struct SweepConfig {
    std::string g_source;                // required
    std::string h_source;                // required
    int max_n = kMaxFactorVertices;      // per-factor order cap
    int max_product = kMaxProductVertices;
    std::vector<int> ks{1, 2, 3};        // cover sizes to classify
    std::string d_mode = "minimum";      // "minimum" or "upto:<size>"
    int jobs = 1;
    std::string out;                     // empty = stdout
    std::string format = "json";         // json | csv | text
    std::string dump_dir = "dumps";
};

SweepConfig parse_config_text(const std::string& text);
SweepConfig parse_config_file(const std::string& path);

// Returns the absolute size bound for "upto:<size>", nullopt for "minimum".
// Throws ConfigError on anything else.
std::optional<int> parse_d_mode(const std::string& mode);

// Graph sources: "file:PATH" (graph6, one per line), "g6:WORD[,WORD...]",
// and generator ranges "paths:A..B", "cycles:A..B", "completes:A..B",
// "stars:A..B" (inclusive; a single number is a one-graph range).
std::vector<Graph> load_graph_source(const std::string& spec, int max_n);

struct SweepTallies {
    long long pairs = 0;
    long long pairs_skipped = 0;
    long long sets = 0;
    long long cs_checks = 0;
    long long single_cover = 0;
    long long pair_cover = 0;
    long long min_pair_cover = 0;
    long long per_layer_minimum = 0;
    long long replays_single = 0;
    long long replays_pair = 0;
    long long replays_delegated = 0;
    long long conjecture_checked = 0;
    long long conjecture_holds = 0;
    long long conjecture_equality = 0;

    SweepTallies& operator+=(const SweepTallies& o);
};

struct SweepReport {
    SweepConfig config;
    SweepTallies tallies;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
};

// Serial reference implementation and the jobs-aware entry point.  Both
// produce identical reports for the same config; the worker count never
// leaks into the output (it is not echoed, and results are merged by pair
// index, not completion order).  A replay failure inside the sweep writes a
// dump under config.dump_dir and surfaces as InvariantViolation.
SweepReport run_sweep_serial(const SweepConfig& config);
SweepReport run_sweep(const SweepConfig& config);

nlohmann::ordered_json report_json(const SweepReport& report);
// Renders per config.format: JSON (pretty, trailing newline), CSV (one row
// per enumerated set), or a text summary.
std::string render_report(const SweepReport& report);

// One hunt candidate: a dominating set of the product smaller than
// gamma(G)*gamma(H) whose layer projections admit a k-cover.  For k <= 2
// such a set contradicts a proved bound, so a hit flags a bug; for k = 3 it
// is a counterexample candidate worth manual review.
struct HuntHit {
    int k = 0;
    int pair_index = 0;
    std::string g6_g, g6_h;
    int gamma_g = 0, gamma_h = 0, gamma_product = 0;
    std::vector<int> d;                    // flat product indices
    std::vector<std::vector<int>> cover;   // k factor vertex sets
    std::string dump_path;                 // where the artifact was written
};

struct HuntResult {
    int k = 0;
    long long pairs_scanned = 0;
    long long pairs_skipped = 0;
    long long sets_scanned = 0;
    std::vector<HuntHit> hits;
};

// Scans all pairs for hits as defined above; every hit is dumped under
// config.dump_dir before being returned.
HuntResult run_hunt(const SweepConfig& config, int k);

nlohmann::ordered_json hunt_json(const HuntResult& result);

// Hunt dump artifacts round-trip exactly: load_hunt_dump(write_hunt_dump(x))
// reproduces every field of x.
std::string write_hunt_dump(const HuntHit& hit, const std::string& dump_dir);
HuntHit load_hunt_dump(const std::string& path);

}  // namespace boxdom

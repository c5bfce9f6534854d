#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxdom/errors.hpp"
#include "boxdom/product.hpp"

namespace boxdom {

// One verified claim inside a replayed argument.  `anchor` is a stable
// dotted identifier for the claim's position in the argument (machine
// consumers key on it); `title` is the human-readable one-liner; `data`
// holds the witnesses that were checked (index arrays for factor sets,
// [g,h] pairs for product sets).
struct ReplayStep {
    std::string anchor;
    std::string title;
    bool passed = true;
    nlohmann::ordered_json data;
};

struct ReplayReport {
    std::string mode;        // "single" or "pair"
    bool delegated = false;  // pair argument collapsed to the single one
    bool swapped = false;    // s1 and s2 exchanged so that |s1| <= |s2|
    std::vector<ReplayStep> steps;
    int bound_lhs = 0;  // |d|
    int bound_rhs = 0;  // gamma(G) * gamma(H)
    bool passed = false;

    // Inputs echoed so a failed run can be dumped and re-run.
    std::string g6_g, g6_h;
    std::vector<int> d_indices, s1_indices;
    std::optional<std::vector<int>> s2_indices;
};

// A claim that is guaranteed by the argument failed to verify.  Always an
// implementation bug; carries the partial report for offline analysis.
struct StepFailed : Error {
    StepFailed(const std::string& msg, ReplayReport partial);
    ReplayReport report;
};

// Replays the single-set bound argument: s must be a minimal dominating
// superset of every layer projection of d.  Splits s by private neighbors,
// verifies the forced columns and the vertical domination of the rest, and
// concludes |d| >= |s| * gamma(H) >= gamma(G) * gamma(H).  Throws
// HypothesisViolated when the inputs do not satisfy the hypothesis and
// StepFailed when a guaranteed claim fails.
ReplayReport replay_one_set(const Graph& g, const Graph& h, const VertexSet& d,
                            const VertexSet& s);

// Replays the two-set bound argument: s1 and s2 dominate g and every layer
// projection of d has s1 or s2 as a minimal dominating superset.  Splits
// the layers into T1/T2 (a layer admissible for both goes to T1), partitions
// each s_i by private-neighbor type, then walks the shared-column cases,
// the paired-neighbor and matching constructions, and the final count down
// to |d| >= |s1| * gamma(H) >= gamma(G) * gamma(H).  When T1 or T2 is empty
// the single-set argument applies verbatim and the replay delegates to it
// (recorded in the report).
ReplayReport replay_two_sets(const Graph& g, const Graph& h, const VertexSet& d,
                             const VertexSet& s1, const VertexSet& s2);

// Renders a report as a one-line-per-step transcript.
std::string replay_transcript(const ReplayReport& report);

// Full JSON form of a report (inputs, every step with its data, verdict).
nlohmann::ordered_json replay_json(const ReplayReport& report);

}  // namespace boxdom

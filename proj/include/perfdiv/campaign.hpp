#ifndef PERFDIV_CAMPAIGN_HPP
#define PERFDIV_CAMPAIGN_HPP

#include "perfdiv/graph.hpp"

#include <json.hpp>

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace perfdiv {

struct ClaimOutcome {
    bool pass;
    nlohmann::json detail; // witnesses, palettes, counterexample subgraphs
};

// A checkable statement: a class filter plus a claim verified on every
// filter hit. Both must be total over the size-guarded graph domain;
// exceptions from the claim are recorded as failed verdicts.
struct TheoremSpec {
    std::string id;
    std::string statement;
    std::function<bool(const Graph&)> filter;
    std::function<ClaimOutcome(const Graph&)> claim;
};

struct CampaignCounterexample {
    std::string g6;
    nlohmann::json detail;
};

struct CampaignReport {
    std::string theorem;
    long scanned = 0;
    long filter_hits = 0;
    long passes = 0;
    long failures = 0; // includes errored claims
    long errors = 0;
    std::vector<CampaignCounterexample> counterexamples;
    double wall_ms = 0;
};

// Applies filter then claim to each graph; emits one JSON verdict line
// per filter hit to `jsonl` when given, then a trailing summary object.
// Per-graph errors are recorded and the campaign continues.
CampaignReport run_campaign(const TheoremSpec& spec, const std::vector<Graph>& graphs,
    std::ostream* jsonl = nullptr);

// Summary object; timing is the only non-deterministic field and can be
// left out.
nlohmann::json report_json(const CampaignReport& r, bool include_timing = true);

// The built-in checkable statements. pd_size_guard bounds the perfect
// divisibility scans inside claims.
std::vector<TheoremSpec> theorem_registry(int pd_size_guard = 12);
const TheoremSpec& find_theorem(const std::vector<TheoremSpec>& registry, const std::string& id);

// Greedy vertex deletion while the claim keeps failing; the result fails
// the claim and every one-vertex deletion of it passes. Throws
// std::invalid_argument when the claim passes on the input.
Graph shrink_counterexample(const Graph& g, const std::function<bool(const Graph&)>& claim_pass);

} // namespace perfdiv

#endif

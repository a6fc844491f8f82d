#pragma once

#include <string>
#include <vector>

#include "dpvc/rule_construction.hpp"

namespace dpvc {

// Ordered rule list; application order is priority order.
struct RuleList {
    int d = 0;
    double beta = 0.0;
    std::vector<SubgraphBranchingRule> rules;

    // Largest pattern size in the list; 0 when empty.
    int psi() const;
};

struct GenerationCaps {
    int max_pattern_size = 13;      // hard limit kMaxVertices
    double time_limit_seconds = 0;  // 0 disables the limit
};

struct AcceptanceEvent {
    int pattern_size = 0;
    bool handled = false;
    int bad_remaining = 0;
    double elapsed_seconds = 0.0;
};

struct GenerationStats {
    int passes = 0;
    int expansions = 0;
    int generate_calls = 0;
    int handled_count = 0;
    double wall_seconds = 0.0;
    std::vector<AcceptanceEvent> acceptances;
    std::vector<int> expansion_sizes;  // common bad-graph size after each expand
};

enum class GenerationStatus { complete, pattern_cap_exceeded, time_limit_exceeded };

// Good list, bad set (all of one size), emitted rules and run statistics.
struct GenerationState {
    std::vector<SmallGraph> good;
    std::vector<SmallGraph> bad;
    RuleList rules;
    GenerationStats stats;
};

struct GenerationResult {
    GenerationStatus status = GenerationStatus::complete;
    RuleList list;
    GenerationStats stats;
    // Bad graphs left unprocessed when a cap stopped the run; empty on
    // completion.
    std::vector<SmallGraph> surviving_bad;
};

// One-vertex extensions of the bad graphs (all the same size), minus every
// graph that contains some good graph as an induced subgraph. Canonical
// order. Throws when the next size would exceed the cap.
std::vector<SmallGraph> expand(const std::vector<SmallGraph>& bad,
                               const std::vector<SmallGraph>& good, int cap = kMaxVertices);

// v is red iff every one-vertex extension of h whose new vertex is adjacent
// to v contains some good graph as an induced subgraph.
VertexSet color(const SmallGraph& h, const std::vector<SmallGraph>& good);

// Runs the generation loop for d-PVC: a full pass over the bad list in
// canonical order, restarted after each acceptance; a pass that accepts
// nothing triggers an expansion. HANDLED graphs join the good list but emit
// no rule. Deterministic for fixed (d, beta, caps).
GenerationResult generate_rule_list(int d, double beta, const GenerationCaps& caps = {},
                                    const HandmadeRuleSet& handmade = {});

}  // namespace dpvc

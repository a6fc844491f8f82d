#pragma once

#include <optional>
#include <vector>

#include "dpvc/branching_rule.hpp"
#include "dpvc/small_graph.hpp"

namespace dpvc {

// Which handmade reductions participate in handled tests and in the solver.
struct HandmadeRuleSet {
    bool red_component = true;
    bool red_star = true;
};

// Result of building a rule for a pattern: either the rule itself, or the
// HANDLED marker meaning every application would be preempted by a handmade
// reduction and no rule needs emitting.
struct GenerateOutcome {
    std::optional<SubgraphBranchingRule> rule;

    bool handled() const { return !rule.has_value(); }

    static GenerateOutcome make_handled() { return GenerateOutcome{std::nullopt}; }
    static GenerateOutcome make_rule_outcome(SubgraphBranchingRule r) {
        return GenerateOutcome{std::move(r)};
    }
};

// The fallback rule: one singleton branch per pattern vertex, factor |V(H)|.
// The pattern must contain a d-path.
SubgraphBranchingRule singleton_rule(const SmallGraph& h, VertexSet red, int d);

// Inclusion-minimal vertex sets whose deletion leaves h without a d-path,
// sorted in branch order. Pairwise incomparable by construction.
std::vector<VertexSet> minimal_branches(const SmallGraph& h, int d);

// True iff branch b is dominated by branch b_dom in the rule (h, red, ...):
// some b_del strictly inside b and nonempty r_star inside red \ b_del satisfy
//   (1) h[r_star] has no d-path,
//   (2) |r_star & b| >= |N_{h - b_del}(r_star) \ r_star| >= 1,
//   (3) b_dom lies inside (b + N_{h - b_del}(r_star)) \ r_star.
bool is_dominated(const SmallGraph& h, VertexSet red, int d, VertexSet b, VertexSet b_dom);

// Keeps one representative branch per sink strongly connected component of
// the domination digraph; the rule stays correct.
std::vector<VertexSet> dominance_free(const SmallGraph& h, VertexSet red,
                                      const std::vector<VertexSet>& branches, int d);

// Greedy factor improvement: repeatedly replace the branch set with
// {B : A not a subset of B} + {A} for the candidate A (a nonempty subset of
// some current branch) that minimizes the factor, while it strictly drops.
std::vector<VertexSet> adjusted_branches(const std::vector<VertexSet>& branches);

// Handled check followed by Minimal, DominanceFree and Adjusted.
GenerateOutcome generate_rule(const SmallGraph& h, VertexSet red, int d,
                              const HandmadeRuleSet& handmade = {});

}  // namespace dpvc

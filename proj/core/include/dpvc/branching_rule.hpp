#pragma once

#include <vector>

#include "dpvc/small_graph.hpp"

namespace dpvc {

// Unique root x >= 1 of 1 = sum x^(-size) over the branch sizes, to absolute
// tolerance 1e-9. A single branch gives exactly 1.0.
double branching_factor(const std::vector<int>& branch_sizes);

// Branch order: by size, then by the sorted vertex id sequences
// lexicographically. Total order on distinct branches.
bool branch_less(VertexSet a, VertexSet b);

std::vector<int> branch_sizes(const std::vector<VertexSet>& branches);

// A pattern H, red vertices R whose images must keep every host neighbor
// inside the matched copy, and branches: vertex sets one of which can be
// assumed inside some optimal solution whenever the rule applies.
struct SubgraphBranchingRule {
    SmallGraph pattern;
    VertexSet red = 0;
    std::vector<VertexSet> branches;
    double factor = 0.0;
};

// Builds a rule with branches sorted in branch order and the factor cached.
SubgraphBranchingRule make_rule(SmallGraph pattern, VertexSet red,
                                std::vector<VertexSet> branches);

// Same, but keeps the branch order given (used by the file parser, which
// must preserve the serialized order).
SubgraphBranchingRule make_rule_keep_order(SmallGraph pattern, VertexSet red,
                                           std::vector<VertexSet> branches);

}  // namespace dpvc

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpvc/generation.hpp"
#include "dpvc/reductions.hpp"

namespace dpvc {

struct SolveResult {
    bool yes = false;
    // On YES when requested: a vertex set S with |S| <= k whose deletion
    // leaves the graph without a d-path.
    std::optional<std::vector<int>> certificate;
};

// Raised when no listed rule applies to a bumpy component larger than psi;
// signals a defective (non-exhaustive) rule list.
class ExhaustivenessViolation : public std::runtime_error {
public:
    ExhaustivenessViolation(std::string message, std::vector<int> component_vertices)
        : std::runtime_error(std::move(message)), component(std::move(component_vertices)) {}

    std::vector<int> component;
};

// Minimum deletion set making the component free of d-paths; the component
// must have at most max_size vertices. Deterministic: smallest size first,
// then lexicographic by vertex ids.
std::vector<int> brute_force_component(const HostGraph& component, int d, int max_size);

// Recursive decision procedure: stopping conditions, first applicable
// handmade reduction, per-component brute force once every bumpy component
// has at most psi vertices, otherwise first-rule branching on the chosen
// large bumpy component.
SolveResult solve(const Instance& inst, int d, const RuleList& rules,
                  bool want_certificate = false, const HandmadeRuleSet& handmade = {});

}  // namespace dpvc

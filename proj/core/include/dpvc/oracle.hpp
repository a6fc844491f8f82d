#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dpvc/generation.hpp"
#include "dpvc/host_graph.hpp"

namespace dpvc::oracle {

// All harness randomness comes from one seeded mt19937_64; bounded draws and
// unit doubles are derived by hand so runs replay exactly from the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    int below(int bound);   // uniform in [0, bound)
    double unit();          // uniform in [0, 1)

private:
    std::mt19937_64 engine_;
};

// Uniform spanning tree plus each non-tree edge independently with
// probability edge_bias. Deterministic per (n, edge_bias, seed).
HostGraph random_connected_graph(int n, double edge_bias, std::uint64_t seed);

// Exact minimum solution size by subset enumeration in increasing size.
// Shares no path-search code with the solver. Refuses n above 15.
int opt_dpvc(const HostGraph& g, int d);

struct Counterexample {
    std::string description;
};

struct VerificationReport {
    int checks = 0;
    int applications = 0;
    std::vector<Counterexample> failures;
    std::uint64_t seed = 0;

    bool ok() const { return failures.empty(); }
    // Human-readable; one machine-parsable "FAIL " line per counterexample.
    std::string to_text() const;
};

// Samples random hosts (n <= 11) until `trials` of them admit the rule, and
// on each applying host checks opt(G) = min over branches of
// |B| + opt(G minus the branch image).
VerificationReport verify_rule_correctness(const SubgraphBranchingRule& rule, int d, int trials,
                                           std::uint64_t seed);

// Enumerates the connected bumpy graphs on exactly psi (and psi + 1 when
// within the enumeration bound) vertices, skips those on which a handmade
// reduction fires, and checks that some rule applies. Falls back to seeded
// sampling when psi exceeds the bound.
VerificationReport verify_exhaustive(const RuleList& rules, int d,
                                     const HandmadeRuleSet& handmade = {},
                                     std::uint64_t sample_seed = 1);

}  // namespace dpvc::oracle

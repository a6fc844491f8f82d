#include <doctest.h>

#include <algorithm>

#include "dpvc/oracle.hpp"
#include "dpvc/solver.hpp"
#include "test_util.hpp"

using namespace dpvc;

namespace {

RuleList rules_for(int d) { return generate_rule_list(d, static_cast<double>(d)).list; }

}  // namespace

TEST_CASE("solver stopping conditions and basics") {
    const RuleList rules = rules_for(3);
    CHECK(solve(Instance{to_host_graph(path_graph(3)), 1}, 3, rules).yes);
    CHECK_FALSE(solve(Instance{to_host_graph(path_graph(3)), 0}, 3, rules).yes);
    CHECK_FALSE(solve(Instance{to_host_graph(path_graph(3)), -1}, 3, rules).yes);
    // Non-bumpy graphs are YES even with a zero budget.
    CHECK(solve(Instance{to_host_graph(complete_graph(2)), 0}, 3, rules).yes);
    CHECK_THROWS_AS(solve(Instance{to_host_graph(path_graph(3)), 1}, 4, rules),
                    std::invalid_argument);
}

TEST_CASE("nine-cycle needs three deletions at d = 3") {
    const RuleList rules = rules_for(3);
    HostGraph c9 = to_host_graph(cycle_graph(9));
    CHECK(oracle::opt_dpvc(c9, 3) == 3);
    CHECK_FALSE(solve(Instance{c9, 2}, 3, rules).yes);
    SolveResult yes = solve(Instance{c9, 3}, 3, rules, true);
    CHECK(yes.yes);
    REQUIRE(yes.certificate.has_value());
    CHECK(yes.certificate->size() <= 3);
    CHECK_FALSE(is_bumpy(c9.without(*yes.certificate), 3));
}

TEST_CASE("brute force component examples") {
    CHECK(brute_force_component(to_host_graph(complete_graph(3)), 2, 5).size() == 2);
    CHECK(brute_force_component(to_host_graph(path_graph(5)), 5, 5).size() == 1);
    CHECK(brute_force_component(to_host_graph(complete_graph(2)), 3, 5).empty());
    CHECK_THROWS_AS(brute_force_component(to_host_graph(path_graph(6)), 3, 5),
                    std::invalid_argument);
    // Deterministic: smallest size, then lexicographic vertex ids.
    auto sol = brute_force_component(to_host_graph(path_graph(3)), 3, 5);
    CHECK(sol == std::vector<int>{0});
}

TEST_CASE("defective rule lists raise an exhaustiveness violation") {
    RuleList defective;
    defective.d = 3;
    defective.beta = 3.0;
    defective.rules.push_back(make_rule(path_graph(3), 0, {VertexSet{1}, VertexSet{2}, VertexSet{4}}));
    // K_4 is bumpy for d=3, larger than psi=3, has no induced path on 3
    // vertices, and neither handmade reduction fires on it.
    HostGraph k4 = to_host_graph(complete_graph(4));
    CHECK_THROWS_AS(solve(Instance{k4, 4}, 3, defective), ExhaustivenessViolation);
    try {
        solve(Instance{k4, 4}, 3, defective);
    } catch (const ExhaustivenessViolation& e) {
        CHECK(e.component == std::vector<int>{0, 1, 2, 3});
        CHECK(std::string(e.what()).find("psi=3") != std::string::npos);
    }
}

TEST_CASE("solver agrees with the oracle across d and budgets") {
    oracle::Rng rng(20240601);
    const double biases[] = {0.0, 0.2, 0.5};
    for (int d = 2; d <= 5; ++d) {
        const RuleList rules = rules_for(d);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 4 + rng.below(9);
            HostGraph g = oracle::random_connected_graph(n, biases[rng.below(3)], rng.next());
            const int opt = oracle::opt_dpvc(g, d);
            for (int k = 0; k <= n; ++k) {
                SolveResult res = solve(Instance{g, k}, d, rules, true);
                CHECK(res.yes == (opt <= k));
                if (res.yes) {
                    REQUIRE(res.certificate.has_value());
                    CHECK(static_cast<int>(res.certificate->size()) <= k);
                    CHECK_FALSE(is_bumpy(g.without(*res.certificate), d));
                } else {
                    CHECK_FALSE(res.certificate.has_value());
                }
            }
        }
    }
}

TEST_CASE("certificates are only materialized on request") {
    const RuleList rules = rules_for(3);
    SolveResult quiet = solve(Instance{to_host_graph(cycle_graph(6)), 4}, 3, rules, false);
    CHECK(quiet.yes);
    CHECK_FALSE(quiet.certificate.has_value());
}

TEST_CASE("disconnected instances brute-force components independently") {
    const RuleList rules = rules_for(3);
    // Two triangles and one isolated vertex: opt is 2, one per triangle.
    HostGraph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    CHECK_FALSE(solve(Instance{g, 1}, 3, rules).yes);
    SolveResult res = solve(Instance{g, 2}, 3, rules, true);
    CHECK(res.yes);
    CHECK(res.certificate->size() == 2);
    CHECK_FALSE(is_bumpy(g.without(*res.certificate), 3));
}

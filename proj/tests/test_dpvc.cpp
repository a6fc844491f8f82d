#include <doctest.h>

#include <algorithm>

#include "dpvc/dpvc.hpp"
#include "dpvc/embedding.hpp"
#include "dpvc/oracle.hpp"
#include "dpvc/reductions.hpp"
#include "dpvc/rule_construction.hpp"
#include "test_util.hpp"

using namespace dpvc;
using test_util::brute_force_connected_classes;

TEST_CASE("bumpiness examples") {
    CHECK(is_bumpy(path_graph(3), 3));
    CHECK_FALSE(is_bumpy(star_graph(3), 4));
    CHECK_FALSE(is_bumpy(SmallGraph(5), 2));
    CHECK(is_bumpy(to_host_graph(path_graph(3)), 3));
    CHECK_FALSE(is_bumpy(to_host_graph(star_graph(3)), 4));
    CHECK_FALSE(is_bumpy(HostGraph(5), 3));
}

TEST_CASE("bumpiness agrees with the longest path on all graphs up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
        auto classes = enumerate_connected_graphs(n);
        for (const SmallGraph& g : classes) {
            const int longest = longest_path_vertices(g);
            for (int d = 2; d <= 8; ++d) {
                CHECK(is_bumpy(g, d) == (longest >= d));
                CHECK(is_bumpy(to_host_graph(g), d) == (longest >= d));
            }
        }
    }
}

TEST_CASE("initial bad list counts and contents") {
    CHECK(initial_bad_list(2).size() == 1);
    CHECK(initial_bad_list(3).size() == 2);
    CHECK(initial_bad_list(4).size() == 5);
    CHECK(initial_bad_list(5).size() == 18);
    for (int d = 2; d <= 5; ++d)
        for (const SmallGraph& g : initial_bad_list(d)) {
            CHECK(g.vertex_count() == d);
            CHECK(is_connected(g));
            CHECK(longest_path_vertices(g) == d);
        }
    CHECK_THROWS_AS(initial_bad_list(9, 8), std::invalid_argument);
}

TEST_CASE("red component reduction examples") {
    // d=3 on the star K_{1,4}: the center plus two leaves span a path,
    // so the center enters the solution.
    {
        Instance inst{to_host_graph(star_graph(4)), 2};
        auto reduced = red_component_reduction(inst, 3);
        REQUIRE(reduced.has_value());
        CHECK(reduced->k == 1);
        CHECK(reduced->graph.vertex_count() == 2);
        CHECK(reduced->graph.edge_count() == 0);
    }
    // d=4 on the path 0-1-2-3-4 at pivot 1: the whole region is deleted.
    {
        Instance inst{to_host_graph(path_graph(5)), 3};
        auto reduced = red_component_reduction(inst, 4);
        REQUIRE(reduced.has_value());
        CHECK(reduced->k == 2);
        CHECK(reduced->graph.vertex_count() == 0);
    }
    // d=4 on a two-leaf star: no path, equal arms, the first leaf goes.
    {
        Instance inst{to_host_graph(star_graph(2)), 1};
        auto reduced = red_component_reduction(inst, 4);
        REQUIRE(reduced.has_value());
        CHECK(reduced->k == 1);
        CHECK(reduced->graph.vertex_count() == 2);
        CHECK_FALSE(reduced->graph.has_vertex(1));
    }
    CHECK_FALSE(red_component_reduction(Instance{to_host_graph(path_graph(4)), 1}, 3).has_value());
}

TEST_CASE("red star reduction examples") {
    {
        Instance inst{to_host_graph(star_graph(3)), 1};
        auto reduced = red_star_reduction(inst, 4);
        REQUIRE(reduced.has_value());
        CHECK(reduced->k == 1);
        CHECK(reduced->graph.vertex_count() == 3);
        CHECK_FALSE(reduced->graph.has_vertex(1));  // smallest-id leaf deleted
    }
    {
        // K_{2,4}: hub {0,1}, twins {2,3,4,5}.
        HostGraph g = HostGraph::from_edges(
            6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
        auto reduced = red_star_reduction(Instance{g, 2}, 6);
        REQUIRE(reduced.has_value());
        CHECK(reduced->k == 2);
        CHECK_FALSE(reduced->graph.has_vertex(2));
        CHECK(reduced->graph.vertex_count() == 5);
    }
    CHECK_FALSE(red_star_reduction(Instance{to_host_graph(path_graph(4)), 1}, 4).has_value());
    // the rule is stated for d >= 4 only
    CHECK_FALSE(red_star_reduction(Instance{to_host_graph(star_graph(3)), 1}, 3).has_value());
}

TEST_CASE("handled tests on pattern/red pairs") {
    const VertexSet ends = static_cast<VertexSet>((1u << 0) | (1u << 2));
    CHECK(handled_red_component(path_graph(3), ends, 3));
    CHECK_FALSE(handled_red_component(path_graph(3), 0, 3));
    CHECK_FALSE(
        handled_red_component(path_graph(5), static_cast<VertexSet>((1u << 0) | (1u << 4)), 4));
    CHECK(handled_red_component(
        path_graph(5), static_cast<VertexSet>((1u << 0) | (1u << 1) | (1u << 3) | (1u << 4)), 4));

    CHECK(handled_red_star(star_graph(3), static_cast<VertexSet>((1u << 1) | (1u << 2)), 4));
    CHECK_FALSE(handled_red_star(star_graph(3), 0, 4));
    CHECK_FALSE(handled_red_star(star_graph(3), full_set(4), 3));
    CHECK_FALSE(handled_red_star(complete_graph(4), full_set(4), 4));
}

TEST_CASE("red component reduction preserves the optimum") {
    oracle::Rng rng(2024);
    int firings = 0;
    const double biases[] = {0.0, 0.2, 0.5};
    while (firings < 300) {
        const int d = 3 + rng.below(3);
        const int n = 4 + rng.below(8);  // up to 11 vertices
        HostGraph g = oracle::random_connected_graph(n, biases[rng.below(3)], rng.next());
        Instance inst{g, n};
        auto reduced = red_component_reduction(inst, d);
        if (!reduced) continue;
        ++firings;
        const int delta = inst.k - reduced->k;
        CHECK(oracle::opt_dpvc(g, d) == oracle::opt_dpvc(reduced->graph, d) + delta);
    }
    CHECK(firings == 300);
}

TEST_CASE("red star reduction preserves the optimum exactly") {
    oracle::Rng rng(77);
    int firings = 0;
    const double biases[] = {0.0, 0.2, 0.5};
    while (firings < 300) {
        const int d = 4 + rng.below(2);
        const int n = 4 + rng.below(8);
        HostGraph g = oracle::random_connected_graph(n, biases[rng.below(3)], rng.next());
        auto reduced = red_star_reduction(Instance{g, n}, d);
        if (!reduced) continue;
        ++firings;
        CHECK(oracle::opt_dpvc(g, d) == oracle::opt_dpvc(reduced->graph, d));
    }
    CHECK(firings == 300);
}

TEST_CASE("handled pairs imply the reduction fires wherever a rule applies") {
    oracle::Rng rng(5150);
    const double biases[] = {0.0, 0.2, 0.5};
    int handled_pairs = 0;
    for (int n = 3; n <= 5; ++n) {
        for (const SmallGraph& h : enumerate_connected_graphs(n)) {
            for (int d = 3; d <= 4; ++d) {
                if (!is_bumpy(h, d)) continue;
                for (std::uint32_t red = 1; red < (1u << n); ++red) {
                    const VertexSet r = static_cast<VertexSet>(red);
                    const bool via_component = handled_red_component(h, r, d);
                    const bool via_star = handled_red_star(h, r, d);
                    if (!via_component && !via_star) continue;
                    ++handled_pairs;
                    for (int trial = 0; trial < 8; ++trial) {
                        HostGraph host = oracle::random_connected_graph(
                            n + rng.below(10 - n), biases[rng.below(3)], rng.next());
                        if (!find_induced_embedding(host, h, r)) continue;
                        const bool fires = (via_component && find_red_component(host, d)) ||
                                           (via_star && find_red_star(host, d));
                        CHECK(fires);
                    }
                }
            }
        }
    }
    CHECK(handled_pairs > 50);
}

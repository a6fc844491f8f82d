#pragma once

#include <optional>
#include <vector>

#include "dpvc/dpvc.hpp"

namespace dpvc {

// Firing site of the red component reduction: pivot v has at least two
// d-path free components comp1, comp2 in G \ v. `union_bumpy` tells whether
// G[{v} + comp1 + comp2] contains a d-path, which decides the reduction:
//   union_bumpy: delete {v} + comp1 + comp2, budget - 1 (v enters the solution)
//   otherwise:   delete comp1 (its longest path from v is no longer), budget kept
struct RedComponentFiring {
    int pivot = -1;
    std::vector<int> comp1;
    std::vector<int> comp2;
    bool union_bumpy = false;
};

// Firing site of the red star reduction (d >= 4): every vertex in `twins` has
// exactly `hub` as its neighborhood and |twins| >= 2 |hub|; the reduction
// deletes `removed` (the smallest twin) with the budget kept.
struct RedStarFiring {
    std::vector<int> hub;
    std::vector<int> twins;
    int removed = -1;
};

std::optional<RedComponentFiring> find_red_component(const HostGraph& g, int d);
std::optional<RedStarFiring> find_red_star(const HostGraph& g, int d);

std::optional<Instance> red_component_reduction(const Instance& inst, int d);
std::optional<Instance> red_star_reduction(const Instance& inst, int d);

// Structural tests on a pattern with red vertices: whenever a rule built for
// (h, red) would apply to some host, the matching handmade reduction would
// fire on that host too, so no rule needs emitting.
bool handled_red_component(const SmallGraph& h, VertexSet red, int d);
bool handled_red_star(const SmallGraph& h, VertexSet red, int d);

}  // namespace dpvc

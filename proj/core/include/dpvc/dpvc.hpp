#pragma once

#include <vector>

#include "dpvc/host_graph.hpp"
#include "dpvc/small_graph.hpp"

namespace dpvc {

// Problem parameters of d-Path Vertex Cover: delete at most k vertices so
// that no simple path on d vertices remains.
struct DpvcConfig {
    int d = 2;
};

struct Instance {
    HostGraph graph;
    int k = 0;
};

// True iff g contains a simple path on d vertices as a subgraph.
bool is_bumpy(const SmallGraph& g, int d);
bool is_bumpy(const HostGraph& g, int d);

// All connected graphs on d vertices that contain a path on d vertices
// (i.e. the traceable graphs), one per isomorphism class, canonical order.
std::vector<SmallGraph> initial_bad_list(int d, int cap = kMaxVertices);

}  // namespace dpvc

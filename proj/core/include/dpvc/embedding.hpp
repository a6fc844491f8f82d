#pragma once

#include <optional>
#include <vector>

#include "dpvc/host_graph.hpp"
#include "dpvc/small_graph.hpp"

namespace dpvc {

// Injective map from pattern vertices to host vertices preserving edges and
// non-edges (induced copy).
struct Embedding {
    std::vector<int> image;  // image[p] = host vertex of pattern vertex p

    std::vector<int> image_of(VertexSet pattern_subset) const;
};

// First induced embedding of `pattern` into `host` (in a fixed search order:
// pattern vertices in BFS order from vertex 0, host candidates by ascending
// id) such that every vertex in `red` maps to a host vertex whose whole host
// neighborhood lies inside the image. Returns nullopt if none exists.
std::optional<Embedding> find_induced_embedding(const HostGraph& host, const SmallGraph& pattern,
                                                VertexSet red);

}  // namespace dpvc

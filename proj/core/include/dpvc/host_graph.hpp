#pragma once

#include <utility>
#include <vector>

#include "dpvc/small_graph.hpp"

namespace dpvc {

// Instance graph of arbitrary size. Vertex ids stay stable across deletions:
// removing vertices marks them absent instead of renumbering the rest.
class HostGraph {
public:
    HostGraph() = default;
    explicit HostGraph(int n);

    static HostGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int capacity() const { return static_cast<int>(adj_.size()); }
    int vertex_count() const { return present_count_; }
    int edge_count() const;

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    // Present neighbors in ascending id order.
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    // Present vertex ids, ascending.
    std::vector<int> vertices() const;

    HostGraph without(int v) const;
    HostGraph without(const std::vector<int>& vs) const;

    // Same id space with only `vs` present.
    HostGraph induced(const std::vector<int>& vs) const;

    // Connected components as ascending id lists, ordered by smallest member.
    std::vector<std::vector<int>> components() const;

private:
    void erase_vertex(int v);

    std::vector<std::vector<int>> adj_;
    std::vector<char> present_;
    int present_count_ = 0;
};

// g restricted to `vs` as a SmallGraph; vs must be ascending and small enough.
SmallGraph to_small_graph(const HostGraph& g, const std::vector<int>& vs);

HostGraph to_host_graph(const SmallGraph& g);

}  // namespace dpvc

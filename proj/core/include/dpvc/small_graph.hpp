#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace dpvc {

// Generator-side graphs (patterns, expansion candidates) live on at most
// kMaxVertices vertices so a row of the adjacency matrix fits in 16 bits.
inline constexpr int kMaxVertices = 16;

using VertexSet = std::uint16_t;

inline int popcount(VertexSet s) { return __builtin_popcount(s); }
inline int lowest_vertex(VertexSet s) { return __builtin_ctz(s); }
inline VertexSet full_set(int n) { return static_cast<VertexSet>((1u << n) - 1u); }

// Undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Adjacency is kept symmetric and irreflexive.
class SmallGraph {
public:
    SmallGraph() = default;
    explicit SmallGraph(int n);

    static SmallGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);

    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }

    // Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const SmallGraph&) const = default;

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

SmallGraph path_graph(int n);
SmallGraph cycle_graph(int n);
SmallGraph complete_graph(int n);
SmallGraph star_graph(int leaves);

// Canonical label: one byte for the vertex count followed by the packed
// upper-triangle bits of the adjacency matrix under the minimizing
// relabeling. Two graphs get equal bytes iff they are isomorphic.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes <=> b.bytes;
    }
};

CanonicalForm canonical_form(const SmallGraph& g);

// The same graph relabeled so that encoding it directly yields its canonical
// label. Idempotent up to isomorphism.
SmallGraph canonical_relabel(const SmallGraph& g);

// Fixed deterministic order on isomorphism classes: by vertex count, then by
// canonical label bytes. Used everywhere a graph list needs "some" order.
bool canonical_less(const SmallGraph& a, const SmallGraph& b);

bool is_connected(const SmallGraph& g);
bool is_connected_subset(const SmallGraph& g, VertexSet subset);

// One representative per isomorphism class of connected graphs on n vertices.
// Throws std::invalid_argument when n exceeds the cap.
std::vector<SmallGraph> enumerate_connected_graphs(int n, int cap = kMaxVertices);

// sigma(h): connected one-vertex extensions of h, one per isomorphism class,
// in canonical order. The new vertex gets a nonempty neighborhood inside h.
std::vector<SmallGraph> one_vertex_extensions(const SmallGraph& h, int cap = kMaxVertices);

// True iff some vertex subset S of g satisfies g[S] isomorphic to h.
bool contains_induced(const SmallGraph& g, const SmallGraph& h);

// Number of vertices on a longest simple path, optionally restricted to the
// vertices in `active`.
int longest_path_vertices(const SmallGraph& g);
int longest_path_vertices(const SmallGraph& g, VertexSet active);

// True iff g restricted to `active` has a simple path on >= target vertices.
bool has_path_on(const SmallGraph& g, VertexSet active, int target);

}  // namespace dpvc

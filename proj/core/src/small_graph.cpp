#include "dpvc/small_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace dpvc {

SmallGraph::SmallGraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("SmallGraph: vertex count out of range: " + std::to_string(n));
}

SmallGraph SmallGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SmallGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void SmallGraph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("SmallGraph: bad edge");
    adj_[u] |= static_cast<VertexSet>(1u << v);
    adj_[v] |= static_cast<VertexSet>(1u << u);
}

int SmallGraph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

SmallGraph path_graph(int n) {
    SmallGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SmallGraph cycle_graph(int n) {
    SmallGraph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

SmallGraph complete_graph(int n) {
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SmallGraph star_graph(int leaves) {
    SmallGraph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

bool is_connected_subset(const SmallGraph& g, VertexSet subset) {
    if (subset == 0) return false;
    VertexSet seen = static_cast<VertexSet>(subset & static_cast<VertexSet>(-subset));
    for (;;) {
        VertexSet frontier = 0;
        for (VertexSet s = seen; s;) {
            int v = lowest_vertex(s);
            s &= static_cast<VertexSet>(s - 1);
            frontier |= g.neighbors(v);
        }
        VertexSet grown = static_cast<VertexSet>(seen | (frontier & subset));
        if (grown == seen) break;
        seen = grown;
    }
    return seen == subset;
}

bool is_connected(const SmallGraph& g) {
    if (g.vertex_count() == 0) return false;
    return is_connected_subset(g, full_set(g.vertex_count()));
}

namespace {

// Upper-triangle bits of the adjacency matrix under permutation `perm`,
// read column by column ((0,1), (0,2), (1,2), (0,3), ...), packed MSB-first
// after the leading vertex-count byte. Placing vertices one position at a
// time appends whole columns, which is what the canonical search needs.
std::vector<std::uint8_t> encode_with_order(const SmallGraph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    std::vector<std::uint8_t> bytes;
    bytes.push_back(static_cast<std::uint8_t>(n));
    int bit = 0;
    std::uint8_t cur = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            cur = static_cast<std::uint8_t>(cur << 1);
            if (g.has_edge(perm[row], perm[col])) cur |= 1u;
            if (++bit == 8) {
                bytes.push_back(cur);
                bit = 0;
                cur = 0;
            }
        }
    }
    if (bit != 0) bytes.push_back(static_cast<std::uint8_t>(cur << (8 - bit)));
    return bytes;
}

// Iterated neighborhood refinement. The resulting per-vertex values are
// isomorphism-invariant, so restricting the canonical search to orderings
// sorted by them keeps the minimum well defined.
std::vector<std::uint64_t> refine_invariants(const SmallGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> inv(n);
    for (int v = 0; v < n; ++v) inv[v] = static_cast<std::uint64_t>(g.degree(v));
    std::vector<std::uint64_t> next(n);
    for (int round = 0; round < 3; ++round) {
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> around;
            for (VertexSet s = g.neighbors(v); s;) {
                int u = lowest_vertex(s);
                s &= static_cast<VertexSet>(s - 1);
                around.push_back(inv[u]);
            }
            std::sort(around.begin(), around.end());
            std::uint64_t h = inv[v] * 0x9e3779b97f4a7c15ULL + 0x1234567;
            for (std::uint64_t a : around) h = (h ^ a) * 0x100000001b3ULL + a;
            next[v] = h;
        }
        inv.swap(next);
    }
    return inv;
}

struct CanonSearch {
    const SmallGraph& g;
    int n;
    std::vector<int> class_of;      // invariant class per vertex
    std::vector<int> class_at_pos;  // which class each position must take
    std::vector<int> perm;          // position -> vertex
    std::vector<std::uint8_t> cur_bits;  // one entry per upper-triangle bit
    std::vector<std::uint8_t> best_bits;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit CanonSearch(const SmallGraph& graph) : g(graph), n(graph.vertex_count()) {
        auto inv = refine_invariants(g);
        std::vector<std::uint64_t> sorted(inv.begin(), inv.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        class_of.resize(n);
        std::vector<int> class_size(sorted.size(), 0);
        for (int v = 0; v < n; ++v) {
            class_of[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), inv[v]) - sorted.begin());
            ++class_size[class_of[v]];
        }
        class_at_pos.reserve(n);
        for (std::size_t c = 0; c < sorted.size(); ++c)
            for (int k = 0; k < class_size[c]; ++k) class_at_pos.push_back(static_cast<int>(c));
        perm.reserve(n);
        cur_bits.reserve(n * (n - 1) / 2);
    }

    // cmp: -1 current prefix already strictly below best, 0 equal so far.
    void place(int pos, VertexSet used, int cmp) {
        if (pos == n) {
            // cmp may be stale once a descendant has already improved best,
            // so leaves always do the full comparison.
            if (!have_best || cur_bits < best_bits) {
                best_bits = cur_bits;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        const int want = class_at_pos[pos];
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            if (class_of[v] != want) continue;
            int child_cmp = cmp;
            std::size_t base = cur_bits.size();
            bool prune = false;
            for (int row = 0; row < pos; ++row) {
                std::uint8_t b = g.has_edge(perm[row], v) ? 1 : 0;
                cur_bits.push_back(b);
                if (child_cmp == 0 && have_best) {
                    std::uint8_t r = best_bits[base + static_cast<std::size_t>(row)];
                    if (b > r) {
                        prune = true;
                        break;
                    }
                    if (b < r) child_cmp = -1;
                }
            }
            if (!prune) {
                perm.push_back(v);
                place(pos + 1, static_cast<VertexSet>(used | (1u << v)), child_cmp);
                perm.pop_back();
            }
            cur_bits.resize(base);
        }
    }
};

std::pair<std::vector<std::uint8_t>, std::vector<int>> canonical_search(const SmallGraph& g) {
    const int n = g.vertex_count();
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("canonical_form: vertex count out of range");
    if (n == 1) return {{1}, {0}};
    CanonSearch search(g);
    search.place(0, 0, 0);
    return {std::move(search.best_bits), std::move(search.best_perm)};
}

std::vector<std::uint8_t> pack_bits(int n, const std::vector<std::uint8_t>& bits) {
    std::vector<std::uint8_t> bytes;
    bytes.push_back(static_cast<std::uint8_t>(n));
    int count = 0;
    std::uint8_t cur = 0;
    for (std::uint8_t b : bits) {
        cur = static_cast<std::uint8_t>((cur << 1) | b);
        if (++count == 8) {
            bytes.push_back(cur);
            count = 0;
            cur = 0;
        }
    }
    if (count != 0) bytes.push_back(static_cast<std::uint8_t>(cur << (8 - count)));
    return bytes;
}

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
    auto [bits, perm] = canonical_search(g);
    if (g.vertex_count() == 1) return CanonicalForm{{1}};
    return CanonicalForm{pack_bits(g.vertex_count(), bits)};
}

SmallGraph canonical_relabel(const SmallGraph& g) {
    auto [bits, perm] = canonical_search(g);
    const int n = g.vertex_count();
    SmallGraph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(perm[i], perm[j])) out.add_edge(i, j);
    return out;
}

bool canonical_less(const SmallGraph& a, const SmallGraph& b) {
    return canonical_form(a) < canonical_form(b);
}

std::vector<SmallGraph> one_vertex_extensions(const SmallGraph& h, int cap) {
    const int n = h.vertex_count();
    if (n + 1 > cap || n + 1 > kMaxVertices)
        throw std::invalid_argument("one_vertex_extensions: size cap exceeded");
    std::map<CanonicalForm, SmallGraph> reps;
    for (VertexSet mask = 1; mask <= full_set(n); ++mask) {
        SmallGraph g(n + 1);
        for (auto [u, v] : h.edges()) g.add_edge(u, v);
        for (VertexSet s = mask; s;) {
            int v = lowest_vertex(s);
            s &= static_cast<VertexSet>(s - 1);
            g.add_edge(v, n);
        }
        SmallGraph canon = canonical_relabel(g);
        reps.emplace(canonical_form(canon), canon);
    }
    std::vector<SmallGraph> out;
    out.reserve(reps.size());
    for (auto& [key, graph] : reps) out.push_back(graph);
    return out;
}

std::vector<SmallGraph> enumerate_connected_graphs(int n, int cap) {
    if (n < 1) throw std::invalid_argument("enumerate_connected_graphs: n must be positive");
    if (n > cap || n > kMaxVertices)
        throw std::invalid_argument("enumerate_connected_graphs: size cap exceeded");
    std::vector<SmallGraph> level = {SmallGraph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<CanonicalForm, SmallGraph> reps;
        for (const SmallGraph& h : level)
            for (SmallGraph& g : one_vertex_extensions(h, cap))
                reps.emplace(canonical_form(g), g);
        level.clear();
        level.reserve(reps.size());
        for (auto& [key, graph] : reps) level.push_back(graph);
    }
    return level;
}

namespace {

bool extend_induced(const SmallGraph& g, const SmallGraph& h, const std::vector<int>& order,
                    std::vector<int>& image, std::size_t depth, VertexSet used) {
    if (depth == order.size()) return true;
    const int p = order[depth];
    for (int c = 0; c < g.vertex_count(); ++c) {
        if ((used >> c) & 1u) continue;
        if (g.degree(c) < h.degree(p)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < depth; ++i) {
            const int q = order[i];
            if (h.has_edge(p, q) != g.has_edge(c, image[static_cast<std::size_t>(q)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[static_cast<std::size_t>(p)] = c;
        if (extend_induced(g, h, order, image, depth + 1, static_cast<VertexSet>(used | (1u << c))))
            return true;
    }
    return false;
}

// Pattern vertices in BFS order from vertex 0 so each new vertex attaches to
// an already-placed one when the pattern is connected.
std::vector<int> bfs_order(const SmallGraph& h) {
    const int n = h.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    VertexSet seen = 0;
    for (int start = 0; start < n; ++start) {
        if ((seen >> start) & 1u) continue;
        order.push_back(start);
        seen |= static_cast<VertexSet>(1u << start);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            for (VertexSet s = h.neighbors(order[head]); s;) {
                int u = lowest_vertex(s);
                s &= static_cast<VertexSet>(s - 1);
                if (!((seen >> u) & 1u)) {
                    seen |= static_cast<VertexSet>(1u << u);
                    order.push_back(u);
                }
            }
        }
    }
    return order;
}

}  // namespace

bool contains_induced(const SmallGraph& g, const SmallGraph& h) {
    if (h.vertex_count() > g.vertex_count()) return false;
    if (h.vertex_count() == g.vertex_count()) return canonical_form(g) == canonical_form(h);
    std::vector<int> image(static_cast<std::size_t>(h.vertex_count()), -1);
    return extend_induced(g, h, bfs_order(h), image, 0, 0);
}

namespace {

// Subset DP over path endpoints: ends[mask] holds the vertices at which some
// simple path covering exactly `mask` can end. Vertices are first compacted
// to the active set so the table has 2^|active| entries.
int longest_path_impl(const SmallGraph& g, VertexSet active, int stop_at) {
    if (active == 0) return 0;
    std::vector<int> verts;
    for (VertexSet s = active; s;) {
        int v = lowest_vertex(s);
        s &= static_cast<VertexSet>(s - 1);
        verts.push_back(v);
    }
    const int m = static_cast<int>(verts.size());
    if (stop_at > 0 && m < stop_at) return 0;
    std::vector<VertexSet> nbr(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && g.has_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]))
                nbr[static_cast<std::size_t>(i)] |= static_cast<VertexSet>(1u << j);

    std::vector<VertexSet> ends(static_cast<std::size_t>(1) << m, 0);
    int best = 1;
    for (int i = 0; i < m; ++i) ends[static_cast<std::size_t>(1) << i] = static_cast<VertexSet>(1u << i);
    if (stop_at == 1) return 1;
    const std::uint32_t all = (static_cast<std::uint32_t>(1) << m) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        VertexSet e = ends[mask];
        if (!e) continue;
        const int size = __builtin_popcount(mask);
        if (size > best) {
            best = size;
            if (stop_at > 0 && best >= stop_at) return best;
        }
        for (VertexSet s = e; s;) {
            int v = lowest_vertex(s);
            s &= static_cast<VertexSet>(s - 1);
            for (VertexSet t = static_cast<VertexSet>(nbr[static_cast<std::size_t>(v)] & ~mask); t;) {
                int u = lowest_vertex(t);
                t &= static_cast<VertexSet>(t - 1);
                ends[static_cast<std::size_t>(mask | (1u << u))] |=
                    static_cast<VertexSet>(1u << u);
            }
        }
    }
    return best;
}

}  // namespace

int longest_path_vertices(const SmallGraph& g) {
    return longest_path_impl(g, full_set(g.vertex_count()), 0);
}

int longest_path_vertices(const SmallGraph& g, VertexSet active) {
    return longest_path_impl(g, active, 0);
}

bool has_path_on(const SmallGraph& g, VertexSet active, int target) {
    if (target <= 0) return true;
    return longest_path_impl(g, active, target) >= target;
}

}  // namespace dpvc

#include "dpvc/embedding.hpp"

#include <algorithm>

namespace dpvc {

std::vector<int> Embedding::image_of(VertexSet pattern_subset) const {
    std::vector<int> out;
    for (VertexSet s = pattern_subset; s;) {
        int p = lowest_vertex(s);
        s &= static_cast<VertexSet>(s - 1);
        out.push_back(image[static_cast<std::size_t>(p)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> pattern_order(const SmallGraph& pattern) {
    const int n = pattern.vertex_count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    VertexSet seen = 0;
    for (int start = 0; start < n; ++start) {
        if ((seen >> start) & 1u) continue;
        order.push_back(start);
        seen |= static_cast<VertexSet>(1u << start);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head)
            for (VertexSet s = pattern.neighbors(order[head]); s;) {
                int u = lowest_vertex(s);
                s &= static_cast<VertexSet>(s - 1);
                if (!((seen >> u) & 1u)) {
                    seen |= static_cast<VertexSet>(1u << u);
                    order.push_back(u);
                }
            }
    }
    return order;
}

struct EmbeddingSearch {
    const HostGraph& host;
    const SmallGraph& pattern;
    VertexSet red;
    std::vector<int> order;
    std::vector<int> hosts;          // candidate pool, ascending ids
    std::vector<char> used;          // indexed by host id
    std::vector<int> image;

    bool run(std::size_t depth) {
        if (depth == order.size()) return red_condition_holds();
        const int p = order[depth];
        const bool p_red = (red >> p) & 1u;
        const int p_deg = pattern.degree(p);
        for (int c : hosts) {
            if (used[static_cast<std::size_t>(c)]) continue;
            const int c_deg = static_cast<int>(host.neighbors(c).size());
            if (c_deg < p_deg) continue;
            // A red image keeps all host neighbors inside the copy, so its
            // host degree must match the pattern degree exactly.
            if (p_red && c_deg != p_deg) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth; ++i) {
                const int q = order[i];
                if (pattern.has_edge(p, q) !=
                    host.has_edge(c, image[static_cast<std::size_t>(q)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(p)] = c;
            used[static_cast<std::size_t>(c)] = 1;
            if (run(depth + 1)) return true;
            used[static_cast<std::size_t>(c)] = 0;
        }
        return false;
    }

    bool red_condition_holds() const {
        for (VertexSet s = red; s;) {
            int r = lowest_vertex(s);
            s &= static_cast<VertexSet>(s - 1);
            for (int u : host.neighbors(image[static_cast<std::size_t>(r)]))
                if (!used[static_cast<std::size_t>(u)]) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<Embedding> find_induced_embedding(const HostGraph& host, const SmallGraph& pattern,
                                                VertexSet red) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    EmbeddingSearch search{host,
                           pattern,
                           red,
                           pattern_order(pattern),
                           host.vertices(),
                           std::vector<char>(static_cast<std::size_t>(host.capacity()), 0),
                           std::vector<int>(static_cast<std::size_t>(pattern.vertex_count()), -1)};
    if (search.run(0)) return Embedding{std::move(search.image)};
    return std::nullopt;
}

}  // namespace dpvc

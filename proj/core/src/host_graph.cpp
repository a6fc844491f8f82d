#include "dpvc/host_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dpvc {

HostGraph::HostGraph(int n) {
    if (n < 0) throw std::invalid_argument("HostGraph: negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    present_.assign(static_cast<std::size_t>(n), 1);
    present_count_ = n;
}

HostGraph HostGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    HostGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool HostGraph::has_vertex(int v) const {
    return v >= 0 && v < capacity() && present_[static_cast<std::size_t>(v)];
}

bool HostGraph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void HostGraph::add_edge(int u, int v) {
    if (u == v || !has_vertex(u) || !has_vertex(v))
        throw std::invalid_argument("HostGraph: bad edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
    if (has_edge(u, v)) return;
    auto& nu = adj_[static_cast<std::size_t>(u)];
    nu.insert(std::upper_bound(nu.begin(), nu.end(), v), v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
}

int HostGraph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < capacity(); ++v)
        if (present_[static_cast<std::size_t>(v)]) twice += adj_[static_cast<std::size_t>(v)].size();
    return static_cast<int>(twice / 2);
}

std::vector<int> HostGraph::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(present_count_));
    for (int v = 0; v < capacity(); ++v)
        if (present_[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

void HostGraph::erase_vertex(int v) {
    if (!has_vertex(v)) return;
    for (int u : adj_[static_cast<std::size_t>(v)]) {
        auto& nu = adj_[static_cast<std::size_t>(u)];
        nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    }
    adj_[static_cast<std::size_t>(v)].clear();
    present_[static_cast<std::size_t>(v)] = 0;
    --present_count_;
}

HostGraph HostGraph::without(int v) const {
    HostGraph g = *this;
    g.erase_vertex(v);
    return g;
}

HostGraph HostGraph::without(const std::vector<int>& vs) const {
    HostGraph g = *this;
    for (int v : vs) g.erase_vertex(v);
    return g;
}

HostGraph HostGraph::induced(const std::vector<int>& vs) const {
    std::vector<char> keep(static_cast<std::size_t>(capacity()), 0);
    for (int v : vs)
        if (has_vertex(v)) keep[static_cast<std::size_t>(v)] = 1;
    HostGraph g = *this;
    for (int v = 0; v < capacity(); ++v)
        if (present_[static_cast<std::size_t>(v)] && !keep[static_cast<std::size_t>(v)])
            g.erase_vertex(v);
    return g;
}

std::vector<std::vector<int>> HostGraph::components() const {
    std::vector<char> seen(static_cast<std::size_t>(capacity()), 0);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < capacity(); ++start) {
        if (!present_[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> comp = {start};
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int u : adj_[static_cast<std::size_t>(comp[head])])
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

SmallGraph to_small_graph(const HostGraph& g, const std::vector<int>& vs) {
    const int m = static_cast<int>(vs.size());
    if (m > kMaxVertices) throw std::invalid_argument("to_small_graph: too many vertices");
    SmallGraph s(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]))
                s.add_edge(i, j);
    return s;
}

HostGraph to_host_graph(const SmallGraph& g) {
    HostGraph h(g.vertex_count());
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    return h;
}

}  // namespace dpvc

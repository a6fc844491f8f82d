#include "dpvc/dpvc.hpp"

#include <stdexcept>

namespace dpvc {

bool is_bumpy(const SmallGraph& g, int d) {
    if (d < 2) throw std::invalid_argument("is_bumpy: d must be at least 2");
    return has_path_on(g, full_set(g.vertex_count()), d);
}

namespace {

// Depth-bounded DFS over simple paths with early exit; d is a small constant.
bool path_dfs(const HostGraph& g, int v, int remaining, std::vector<char>& on_path) {
    if (remaining == 0) return true;
    on_path[static_cast<std::size_t>(v)] = 1;
    for (int u : g.neighbors(v)) {
        if (on_path[static_cast<std::size_t>(u)]) continue;
        if (path_dfs(g, u, remaining - 1, on_path)) {
            on_path[static_cast<std::size_t>(v)] = 0;
            return true;
        }
    }
    on_path[static_cast<std::size_t>(v)] = 0;
    return false;
}

}  // namespace

bool is_bumpy(const HostGraph& g, int d) {
    if (d < 2) throw std::invalid_argument("is_bumpy: d must be at least 2");
    if (g.vertex_count() < d) return false;
    std::vector<char> on_path(static_cast<std::size_t>(g.capacity()), 0);
    for (int v : g.vertices())
        if (path_dfs(g, v, d - 1, on_path)) return true;
    return false;
}

std::vector<SmallGraph> initial_bad_list(int d, int cap) {
    if (d < 2) throw std::invalid_argument("initial_bad_list: d must be at least 2");
    std::vector<SmallGraph> out;
    for (const SmallGraph& g : enumerate_connected_graphs(d, cap))
        if (has_path_on(g, full_set(d), d)) out.push_back(g);
    return out;
}

}  // namespace dpvc

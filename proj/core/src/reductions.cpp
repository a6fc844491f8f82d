#include "dpvc/reductions.hpp"

#include <algorithm>
#include <map>

namespace dpvc {

namespace {

// Longest simple path starting in v within g restricted to `allowed`.
// Only used on d-path free vertex sets, so the depth stays below d.
int longest_from(const HostGraph& g, int v, const std::vector<char>& allowed,
                 std::vector<char>& on_path) {
    on_path[static_cast<std::size_t>(v)] = 1;
    int best = 1;
    for (int u : g.neighbors(v)) {
        if (!allowed[static_cast<std::size_t>(u)] || on_path[static_cast<std::size_t>(u)]) continue;
        best = std::max(best, 1 + longest_from(g, u, allowed, on_path));
    }
    on_path[static_cast<std::size_t>(v)] = 0;
    return best;
}

}  // namespace

std::optional<RedComponentFiring> find_red_component(const HostGraph& g, int d) {
    for (int v : g.vertices()) {
        HostGraph rest = g.without(v);
        std::vector<std::vector<int>> free_comps;
        for (auto& comp : rest.components()) {
            if (!is_bumpy(rest.induced(comp), d)) free_comps.push_back(comp);
            if (free_comps.size() == 2) break;
        }
        if (free_comps.size() < 2) continue;
        // components() orders by smallest member, so this picks the pair
        // with the smallest minimum vertex ids
        RedComponentFiring firing;
        firing.pivot = v;
        firing.comp1 = std::move(free_comps[0]);
        firing.comp2 = std::move(free_comps[1]);

        std::vector<int> region = firing.comp1;
        region.insert(region.end(), firing.comp2.begin(), firing.comp2.end());
        region.push_back(v);
        firing.union_bumpy = is_bumpy(g.induced(region), d);
        if (!firing.union_bumpy) {
            std::vector<char> allowed(static_cast<std::size_t>(g.capacity()), 0);
            std::vector<char> on_path(static_cast<std::size_t>(g.capacity()), 0);
            for (int u : firing.comp1) allowed[static_cast<std::size_t>(u)] = 1;
            allowed[static_cast<std::size_t>(v)] = 1;
            int len1 = longest_from(g, v, allowed, on_path);
            for (int u : firing.comp1) allowed[static_cast<std::size_t>(u)] = 0;
            for (int u : firing.comp2) allowed[static_cast<std::size_t>(u)] = 1;
            int len2 = longest_from(g, v, allowed, on_path);
            // delete the component whose longest path from v is no longer
            if (len1 > len2) std::swap(firing.comp1, firing.comp2);
        }
        return firing;
    }
    return std::nullopt;
}

std::optional<RedStarFiring> find_red_star(const HostGraph& g, int d) {
    if (d < 4) return std::nullopt;
    const int hub_cap = d / 2 - 1;
    std::map<std::vector<int>, std::vector<int>> classes;
    for (int v : g.vertices()) classes[g.neighbors(v)].push_back(v);
    const std::vector<int>* best = nullptr;
    const std::vector<int>* best_hub = nullptr;
    for (const auto& [hub, members] : classes) {
        if (static_cast<int>(hub.size()) > hub_cap) continue;
        if (static_cast<int>(members.size()) < std::max<int>(1, 2 * static_cast<int>(hub.size())))
            continue;
        if (!best || members.front() < best->front()) {
            best = &members;
            best_hub = &hub;
        }
    }
    if (!best) return std::nullopt;
    return RedStarFiring{*best_hub, *best, best->front()};
}

std::optional<Instance> red_component_reduction(const Instance& inst, int d) {
    auto firing = find_red_component(inst.graph, d);
    if (!firing) return std::nullopt;
    if (firing->union_bumpy) {
        std::vector<int> region = firing->comp1;
        region.insert(region.end(), firing->comp2.begin(), firing->comp2.end());
        region.push_back(firing->pivot);
        return Instance{inst.graph.without(region), inst.k - 1};
    }
    return Instance{inst.graph.without(firing->comp1), inst.k};
}

std::optional<Instance> red_star_reduction(const Instance& inst, int d) {
    auto firing = find_red_star(inst.graph, d);
    if (!firing) return std::nullopt;
    return Instance{inst.graph.without(firing->removed), inst.k};
}

namespace {

std::vector<VertexSet> component_masks(const SmallGraph& g, VertexSet within) {
    std::vector<VertexSet> comps;
    VertexSet left = within;
    while (left) {
        VertexSet comp = static_cast<VertexSet>(left & static_cast<VertexSet>(-left));
        for (;;) {
            VertexSet frontier = 0;
            for (VertexSet s = comp; s;) {
                int v = lowest_vertex(s);
                s &= static_cast<VertexSet>(s - 1);
                frontier |= g.neighbors(v);
            }
            VertexSet grown = static_cast<VertexSet>(comp | (frontier & within));
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        left &= static_cast<VertexSet>(~comp);
    }
    return comps;
}

}  // namespace

bool handled_red_component(const SmallGraph& h, VertexSet red, int d) {
    const int n = h.vertex_count();
    for (int v = 0; v < n; ++v) {
        VertexSet rest = static_cast<VertexSet>(full_set(n) & ~(1u << v));
        int found = 0;
        for (VertexSet comp : component_masks(h, rest)) {
            if ((comp & ~red) != 0) continue;
            if (has_path_on(h, comp, d)) continue;
            if (++found == 2) return true;
        }
    }
    return false;
}

bool handled_red_star(const SmallGraph& h, VertexSet red, int d) {
    if (d < 4) return false;
    const int hub_cap = d / 2 - 1;
    const int n = h.vertex_count();
    std::map<VertexSet, int> class_size;
    for (int v = 0; v < n; ++v)
        if ((red >> v) & 1u) ++class_size[h.neighbors(v)];
    for (auto [hub, size] : class_size)
        if (popcount(hub) <= hub_cap && size >= std::max(1, 2 * popcount(hub))) return true;
    return false;
}

}  // namespace dpvc

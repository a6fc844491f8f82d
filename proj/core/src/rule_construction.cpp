#include "dpvc/rule_construction.hpp"

#include <algorithm>
#include <stdexcept>

#include "dpvc/dpvc.hpp"
#include "dpvc/reductions.hpp"

namespace dpvc {

SubgraphBranchingRule singleton_rule(const SmallGraph& h, VertexSet red, int d) {
    if (!is_bumpy(h, d)) throw std::invalid_argument("singleton_rule: pattern has no d-path");
    std::vector<VertexSet> branches;
    for (int v = 0; v < h.vertex_count(); ++v)
        branches.push_back(static_cast<VertexSet>(1u << v));
    return make_rule(h, red, std::move(branches));
}

std::vector<VertexSet> minimal_branches(const SmallGraph& h, int d) {
    const int n = h.vertex_count();
    const VertexSet all = full_set(n);
    if (!has_path_on(h, all, d))
        throw std::invalid_argument("minimal_branches: pattern has no d-path");
    std::vector<VertexSet> minimal;
    // Subsets by increasing size; any superset of a found solution is not
    // minimal and is skipped before the path test.
    for (int size = 1; size <= n; ++size) {
        for (std::uint32_t mask = 1; mask <= all; ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            const VertexSet s = static_cast<VertexSet>(mask);
            bool superset = false;
            for (VertexSet m : minimal)
                if ((m & ~s) == 0) {
                    superset = true;
                    break;
                }
            if (superset) continue;
            if (!has_path_on(h, static_cast<VertexSet>(all & ~s), d)) minimal.push_back(s);
        }
    }
    std::sort(minimal.begin(), minimal.end(), branch_less);
    return minimal;
}

namespace {

VertexSet neighborhood_of_set(const SmallGraph& h, VertexSet set) {
    VertexSet nbr = 0;
    for (VertexSet s = set; s;) {
        int v = lowest_vertex(s);
        s &= static_cast<VertexSet>(s - 1);
        nbr |= h.neighbors(v);
    }
    return static_cast<VertexSet>(nbr & ~set);
}

// Proper subsets of b in increasing size order, the empty set included.
std::vector<VertexSet> proper_subsets_by_size(VertexSet b) {
    std::vector<VertexSet> subs;
    for (VertexSet s = b;; s = static_cast<VertexSet>((s - 1) & b)) {
        if (s != b) subs.push_back(s);
        if (s == 0) break;
    }
    std::sort(subs.begin(), subs.end(), branch_less);
    return subs;
}

}  // namespace

bool is_dominated(const SmallGraph& h, VertexSet red, int d, VertexSet b, VertexSet b_dom) {
    if (b == b_dom || red == 0) return false;
    // b_del by increasing size, then r_star by increasing size; the first
    // witness decides (the order only fixes the search, not the answer).
    for (VertexSet b_del : proper_subsets_by_size(b)) {
        const VertexSet red_avail = static_cast<VertexSet>(red & ~b_del);
        if (red_avail == 0) continue;
        std::vector<VertexSet> stars;
        for (VertexSet s = red_avail; s; s = static_cast<VertexSet>((s - 1) & red_avail))
            stars.push_back(s);
        std::sort(stars.begin(), stars.end(), branch_less);
        for (VertexSet r_star : stars) {
            if (has_path_on(h, r_star, d)) continue;
            const VertexSet outside =
                static_cast<VertexSet>(neighborhood_of_set(h, r_star) & ~b_del);
            const int boundary = popcount(outside);
            if (boundary < 1) continue;
            if (popcount(static_cast<VertexSet>(r_star & b)) < boundary) continue;
            const VertexSet target = static_cast<VertexSet>((b | outside) & ~r_star);
            if ((b_dom & ~target) == 0) return true;
        }
    }
    return false;
}

namespace {

// Tarjan over the domination digraph; input order is the branch order, which
// keeps component discovery deterministic.
struct SccFinder {
    const std::vector<std::vector<int>>& out_edges;
    std::vector<int> index, low, comp, stack;
    std::vector<char> on_stack;
    int next_index = 0, comp_count = 0;

    explicit SccFinder(const std::vector<std::vector<int>>& edges)
        : out_edges(edges),
          index(edges.size(), -1),
          low(edges.size(), 0),
          comp(edges.size(), -1),
          on_stack(edges.size(), 0) {}

    void visit(int v) {
        index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
        stack.push_back(v);
        on_stack[static_cast<std::size_t>(v)] = 1;
        for (int u : out_edges[static_cast<std::size_t>(v)]) {
            if (index[static_cast<std::size_t>(u)] < 0) {
                visit(u);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(u)]);
            } else if (on_stack[static_cast<std::size_t>(u)]) {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(u)]);
            }
        }
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
            for (;;) {
                int u = stack.back();
                stack.pop_back();
                on_stack[static_cast<std::size_t>(u)] = 0;
                comp[static_cast<std::size_t>(u)] = comp_count;
                if (u == v) break;
            }
            ++comp_count;
        }
    }

    void run() {
        for (std::size_t v = 0; v < out_edges.size(); ++v)
            if (index[v] < 0) visit(static_cast<int>(v));
    }
};

}  // namespace

std::vector<VertexSet> dominance_free(const SmallGraph& h, VertexSet red,
                                      const std::vector<VertexSet>& branches, int d) {
    const int m = static_cast<int>(branches.size());
    if (m <= 1 || red == 0) return branches;
    std::vector<std::vector<int>> edges(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && is_dominated(h, red, d, branches[static_cast<std::size_t>(i)],
                                       branches[static_cast<std::size_t>(j)]))
                edges[static_cast<std::size_t>(i)].push_back(j);

    SccFinder scc(edges);
    scc.run();
    std::vector<char> sink(static_cast<std::size_t>(scc.comp_count), 1);
    for (int v = 0; v < m; ++v)
        for (int u : edges[static_cast<std::size_t>(v)])
            if (scc.comp[static_cast<std::size_t>(v)] != scc.comp[static_cast<std::size_t>(u)])
                sink[static_cast<std::size_t>(scc.comp[static_cast<std::size_t>(v)])] = 0;

    // One representative per sink component: its branch-order minimum.
    std::vector<VertexSet> reps(static_cast<std::size_t>(scc.comp_count), 0);
    std::vector<char> seen(static_cast<std::size_t>(scc.comp_count), 0);
    for (int v = 0; v < m; ++v) {
        const int c = scc.comp[static_cast<std::size_t>(v)];
        if (!sink[static_cast<std::size_t>(c)]) continue;
        const VertexSet b = branches[static_cast<std::size_t>(v)];
        if (!seen[static_cast<std::size_t>(c)] || branch_less(b, reps[static_cast<std::size_t>(c)])) {
            reps[static_cast<std::size_t>(c)] = b;
            seen[static_cast<std::size_t>(c)] = 1;
        }
    }
    std::vector<VertexSet> out;
    for (int c = 0; c < scc.comp_count; ++c)
        if (seen[static_cast<std::size_t>(c)]) out.push_back(reps[static_cast<std::size_t>(c)]);
    std::sort(out.begin(), out.end(), branch_less);
    return out;
}

std::vector<VertexSet> adjusted_branches(const std::vector<VertexSet>& branches) {
    std::vector<VertexSet> current = branches;
    std::sort(current.begin(), current.end(), branch_less);
    double current_factor = branching_factor(branch_sizes(current));
    for (;;) {
        // Candidate pool: nonempty subsets of the current branches.
        std::vector<VertexSet> pool;
        for (VertexSet b : current)
            for (VertexSet s = b; s; s = static_cast<VertexSet>((s - 1) & b)) pool.push_back(s);
        std::sort(pool.begin(), pool.end(), branch_less);
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

        double best_factor = current_factor;
        std::vector<VertexSet> best_set;
        for (VertexSet a : pool) {
            std::vector<VertexSet> candidate;
            for (VertexSet b : current)
                if ((a & ~b) != 0) candidate.push_back(b);  // keep b unless a is inside it
            candidate.push_back(a);
            std::sort(candidate.begin(), candidate.end(), branch_less);
            candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
            double f = branching_factor(branch_sizes(candidate));
            // Pool order is the branch order, so ties keep the first (and
            // branch-order smallest) minimizer.
            if (f < best_factor - 1e-12) {
                best_factor = f;
                best_set = std::move(candidate);
            }
        }
        if (best_set.empty()) return current;
        current = std::move(best_set);
        current_factor = best_factor;
    }
}

GenerateOutcome generate_rule(const SmallGraph& h, VertexSet red, int d,
                              const HandmadeRuleSet& handmade) {
    if (handmade.red_component && handled_red_component(h, red, d))
        return GenerateOutcome::make_handled();
    if (handmade.red_star && handled_red_star(h, red, d))
        return GenerateOutcome::make_handled();
    std::vector<VertexSet> branches = minimal_branches(h, d);
    branches = dominance_free(h, red, branches, d);
    branches = adjusted_branches(branches);
    return GenerateOutcome::make_rule_outcome(make_rule(h, red, std::move(branches)));
}

}  // namespace dpvc

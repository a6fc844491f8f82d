#include "dpvc/solver.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "dpvc/embedding.hpp"

namespace dpvc {

std::vector<int> brute_force_component(const HostGraph& component, int d, int max_size) {
    const std::vector<int> verts = component.vertices();
    const int m = static_cast<int>(verts.size());
    if (m > max_size)
        throw std::invalid_argument("brute_force_component: component exceeds the size bound");
    const SmallGraph local = to_small_graph(component, verts);
    const VertexSet all = full_set(m);
    if (!has_path_on(local, all, d)) return {};
    // Combinations in lexicographic id order within each size.
    for (int size = 1; size <= m; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        for (;;) {
            VertexSet mask = 0;
            for (int i : pick) mask |= static_cast<VertexSet>(1u << i);
            if (!has_path_on(local, static_cast<VertexSet>(all & ~mask), d)) {
                std::vector<int> out;
                for (int i : pick) out.push_back(verts[static_cast<std::size_t>(i)]);
                return out;
            }
            int pos = size - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == m - size + pos) --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i)
                pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    // Deleting everything always works, so the loop cannot fall through.
    return verts;
}

namespace {

struct Solver {
    int d;
    const RuleList& rules;
    bool want_certificate;
    const HandmadeRuleSet& handmade;
    int psi;

    SolveResult no() const { return SolveResult{false, std::nullopt}; }

    SolveResult yes(std::vector<int> cert) const {
        if (!want_certificate) return SolveResult{true, std::nullopt};
        std::sort(cert.begin(), cert.end());
        return SolveResult{true, std::move(cert)};
    }

    static std::vector<int> merged(std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }

    SolveResult run(const HostGraph& g, int k) {
        if (k < 0) return no();
        if (!is_bumpy(g, d)) return yes({});
        if (k == 0) return no();

        if (handmade.red_component) {
            if (auto firing = find_red_component(g, d)) return apply_red_component(g, k, *firing);
        }
        if (handmade.red_star) {
            if (auto firing = find_red_star(g, d)) return apply_red_star(g, k, *firing);
        }

        const auto comps = g.components();
        // Components are ordered by smallest member, so the first oversized
        // bumpy one contains the smallest vertex id.
        for (const auto& comp : comps)
            if (static_cast<int>(comp.size()) > psi && is_bumpy(g.induced(comp), d))
                return branch_on_component(g, k, comp);

        int budget_needed = 0;
        std::vector<int> combined;
        for (const auto& comp : comps) {
            if (static_cast<int>(comp.size()) < d) continue;
            std::vector<int> sol = brute_force_component(g.induced(comp), d, psi);
            budget_needed += static_cast<int>(sol.size());
            if (want_certificate) combined = merged(std::move(combined), sol);
        }
        if (budget_needed <= k) return yes(std::move(combined));
        return no();
    }

    SolveResult apply_red_component(const HostGraph& g, int k, const RedComponentFiring& firing) {
        if (firing.union_bumpy) {
            std::vector<int> region = firing.comp1;
            region.insert(region.end(), firing.comp2.begin(), firing.comp2.end());
            region.push_back(firing.pivot);
            SolveResult sub = run(g.without(region), k - 1);
            if (!sub.yes) return no();
            if (!want_certificate) return sub;
            return yes(merged(std::move(*sub.certificate), {firing.pivot}));
        }
        SolveResult sub = run(g.without(firing.comp1), k);
        if (!sub.yes || !want_certificate) return sub;
        // The sub-certificate may cover the kept twin component instead of
        // the pivot; swap it for the pivot when it misses the deleted side.
        std::vector<int> cert = *sub.certificate;
        if (is_bumpy(g.without(cert), d)) {
            std::vector<int> fixed;
            for (int v : cert)
                if (std::find(firing.comp2.begin(), firing.comp2.end(), v) == firing.comp2.end())
                    fixed.push_back(v);
            fixed.push_back(firing.pivot);
            assert(static_cast<int>(fixed.size()) <= k && !is_bumpy(g.without(fixed), d));
            return yes(std::move(fixed));
        }
        return yes(std::move(cert));
    }

    SolveResult apply_red_star(const HostGraph& g, int k, const RedStarFiring& firing) {
        SolveResult sub = run(g.without(firing.removed), k);
        if (!sub.yes || !want_certificate) return sub;
        std::vector<int> cert = *sub.certificate;
        if (is_bumpy(g.without(cert), d)) {
            // Any d-path through a twin also meets the hub, so covering the
            // hub instead of the twins repairs the certificate.
            std::vector<int> fixed;
            for (int v : cert)
                if (std::find(firing.twins.begin(), firing.twins.end(), v) == firing.twins.end())
                    fixed.push_back(v);
            for (int c : firing.hub)
                if (std::find(fixed.begin(), fixed.end(), c) == fixed.end()) fixed.push_back(c);
            assert(static_cast<int>(fixed.size()) <= k && !is_bumpy(g.without(fixed), d));
            return yes(std::move(fixed));
        }
        return yes(std::move(cert));
    }

    SolveResult branch_on_component(const HostGraph& g, int k, const std::vector<int>& comp) {
        HostGraph sub = g.induced(comp);
        for (const SubgraphBranchingRule& rule : rules.rules) {
            auto embedding = find_induced_embedding(sub, rule.pattern, rule.red);
            if (!embedding) continue;
            for (VertexSet branch : rule.branches) {
                std::vector<int> deleted = embedding->image_of(branch);
                SolveResult r = run(g.without(deleted), k - static_cast<int>(deleted.size()));
                if (r.yes) {
                    if (!want_certificate) return r;
                    return yes(merged(std::move(*r.certificate), deleted));
                }
            }
            return no();
        }
        std::ostringstream msg;
        msg << "no rule applies to a bumpy component larger than psi=" << psi << " (vertices:";
        for (int v : comp) msg << ' ' << v;
        msg << ")";
        throw ExhaustivenessViolation(msg.str(), comp);
    }
};

}  // namespace

SolveResult solve(const Instance& inst, int d, const RuleList& rules, bool want_certificate,
                  const HandmadeRuleSet& handmade) {
    if (rules.d != d) throw std::invalid_argument("solve: rule list generated for a different d");
    Solver solver{d, rules, want_certificate, handmade, rules.psi()};
    return solver.run(inst.graph, inst.k);
}

}  // namespace dpvc

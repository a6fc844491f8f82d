#include "dpvc/generation.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "dpvc/dpvc.hpp"

namespace dpvc {

int RuleList::psi() const {
    int best = 0;
    for (const auto& rule : rules) best = std::max(best, rule.pattern.vertex_count());
    return best;
}

namespace {

bool contains_any_induced(const SmallGraph& g, const std::vector<SmallGraph>& list) {
    for (const SmallGraph& f : list)
        if (contains_induced(g, f)) return true;
    return false;
}

// Cache key for graphs already held in the bad list: the labeled adjacency
// rows identify the stored object without a canonical search.
std::vector<std::uint16_t> labeled_key(const SmallGraph& g) {
    std::vector<std::uint16_t> key;
    key.reserve(static_cast<std::size_t>(g.vertex_count()) + 1);
    key.push_back(static_cast<std::uint16_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) key.push_back(g.neighbors(v));
    return key;
}

}  // namespace

std::vector<SmallGraph> expand(const std::vector<SmallGraph>& bad,
                               const std::vector<SmallGraph>& good, int cap) {
    if (bad.empty()) return {};
    const int n = bad.front().vertex_count();
    for (const SmallGraph& h : bad)
        if (h.vertex_count() != n)
            throw std::invalid_argument("expand: bad graphs must share one size");
    if (n + 1 > cap || n + 1 > kMaxVertices)
        throw std::invalid_argument("expand: size cap exceeded");

    std::map<CanonicalForm, SmallGraph> merged;
    for (const SmallGraph& h : bad)
        for (SmallGraph& g : one_vertex_extensions(h, cap)) merged.emplace(canonical_form(g), g);

    std::vector<SmallGraph> out;
    for (auto& [key, g] : merged)
        if (!contains_any_induced(g, good)) out.push_back(g);
    return out;
}

VertexSet color(const SmallGraph& h, const std::vector<SmallGraph>& good) {
    if (good.empty()) return 0;  // extensions escape an empty filter
    const int n = h.vertex_count();
    if (n + 1 > kMaxVertices)
        throw std::invalid_argument("color: pattern too large to extend");
    VertexSet red = 0;
    const VertexSet all = full_set(n);
    for (int v = 0; v < n; ++v) {
        bool all_covered = true;
        for (std::uint32_t mask = 1; mask <= all && all_covered; ++mask) {
            if (!((mask >> v) & 1u)) continue;
            SmallGraph ext(n + 1);
            for (auto [a, b] : h.edges()) ext.add_edge(a, b);
            for (std::uint32_t s = mask; s;) {
                int u = __builtin_ctz(s);
                s &= s - 1;
                ext.add_edge(u, n);
            }
            if (!contains_any_induced(ext, good)) all_covered = false;
        }
        if (all_covered) red |= static_cast<VertexSet>(1u << v);
    }
    return red;
}

GenerationResult generate_rule_list(int d, double beta, const GenerationCaps& caps,
                                    const HandmadeRuleSet& handmade) {
    if (d < 2) throw std::invalid_argument("generate_rule_list: d must be at least 2");
    if (beta < 1.0) throw std::invalid_argument("generate_rule_list: beta must be at least 1");
    if (caps.max_pattern_size < d || caps.max_pattern_size > kMaxVertices)
        throw std::invalid_argument("generate_rule_list: bad pattern size cap");

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&start] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    auto out_of_time = [&] {
        return caps.time_limit_seconds > 0 && elapsed() > caps.time_limit_seconds;
    };

    GenerationState state;
    state.rules.d = d;
    state.rules.beta = beta;
    state.bad = initial_bad_list(d, caps.max_pattern_size);

    auto finish = [&](GenerationStatus status) {
        state.stats.wall_seconds = elapsed();
        return GenerationResult{status, std::move(state.rules), std::move(state.stats),
                                std::move(state.bad)};
    };

    // Color only depends on the pattern and the good list, and the good list
    // only changes on acceptance, so results are memoized per pass.
    std::map<std::vector<std::uint16_t>, VertexSet> color_cache;

    while (!state.bad.empty()) {
        bool accepted_this_pass = false;
        ++state.stats.passes;
        for (std::size_t i = 0; i < state.bad.size(); ++i) {
            if (out_of_time()) return finish(GenerationStatus::time_limit_exceeded);
            const SmallGraph& h = state.bad[i];
            std::vector<std::uint16_t> key = labeled_key(h);
            VertexSet red;
            if (auto it = color_cache.find(key); it != color_cache.end()) {
                red = it->second;
            } else {
                red = color(h, state.good);
                color_cache.emplace(std::move(key), red);
            }
            ++state.stats.generate_calls;
            GenerateOutcome outcome = generate_rule(h, red, d, handmade);
            const bool ok =
                outcome.handled() || outcome.rule->factor <= beta + 1e-9;
            if (!ok) continue;

            state.good.push_back(h);
            state.bad.erase(state.bad.begin() + static_cast<std::ptrdiff_t>(i));
            if (outcome.handled()) {
                ++state.stats.handled_count;
            } else {
                state.rules.rules.push_back(std::move(*outcome.rule));
            }
            state.stats.acceptances.push_back(AcceptanceEvent{
                state.good.back().vertex_count(), outcome.handled(),
                static_cast<int>(state.bad.size()), elapsed()});
            color_cache.clear();
            accepted_this_pass = true;
            break;  // restart the pass over the mutated bad list
        }
        if (accepted_this_pass) continue;
        if (state.bad.empty()) break;
        const int next_size = state.bad.front().vertex_count() + 1;
        if (next_size > caps.max_pattern_size)
            return finish(GenerationStatus::pattern_cap_exceeded);
        if (out_of_time()) return finish(GenerationStatus::time_limit_exceeded);
        state.bad = expand(state.bad, state.good, caps.max_pattern_size);
        ++state.stats.expansions;
        state.stats.expansion_sizes.push_back(next_size);
        color_cache.clear();
    }
    return finish(GenerationStatus::complete);
}

}  // namespace dpvc

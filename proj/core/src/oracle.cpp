#include "dpvc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dpvc/embedding.hpp"
#include "dpvc/reductions.hpp"

namespace dpvc::oracle {

int Rng::below(int bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % b;
    for (;;) {
        std::uint64_t x = engine_();
        if (x < limit) return static_cast<int>(x % b);
    }
}

double Rng::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

HostGraph random_connected_graph(int n, double edge_bias, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n must be positive");
    if (edge_bias < 0.0 || edge_bias > 1.0)
        throw std::invalid_argument("random_connected_graph: edge_bias outside [0,1]");
    Rng rng(seed);
    HostGraph g(n);
    if (n == 1) return g;

    // Uniform labeled tree from a random Pruefer sequence.
    std::vector<int> pruefer(static_cast<std::size_t>(std::max(0, n - 2)));
    for (int& a : pruefer) a = rng.below(n);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int a : pruefer) ++degree[static_cast<std::size_t>(a)];
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int a : pruefer) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
                leaf = v;
                break;
            }
        g.add_edge(leaf, a);
        used[static_cast<std::size_t>(leaf)] = 1;
        --degree[static_cast<std::size_t>(a)];
    }
    int last1 = -1, last2 = -1;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1) {
            if (last1 < 0)
                last1 = v;
            else
                last2 = v;
        }
    g.add_edge(last1, last2);

    if (edge_bias > 0.0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                if (rng.unit() < edge_bias) g.add_edge(u, v);
            }
    }
    return g;
}

namespace {

// Path existence by exhaustive simple-path enumeration, written apart from
// the solver's search on purpose: this is the ground truth it is checked
// against.
bool oracle_path_exists(const std::vector<std::vector<int>>& adj, std::vector<int>& path,
                        std::vector<char>& visited, int need) {
    if (static_cast<int>(path.size()) == need) return true;
    for (int u : adj[static_cast<std::size_t>(path.back())]) {
        if (visited[static_cast<std::size_t>(u)]) continue;
        visited[static_cast<std::size_t>(u)] = 1;
        path.push_back(u);
        if (oracle_path_exists(adj, path, visited, need)) return true;
        path.pop_back();
        visited[static_cast<std::size_t>(u)] = 0;
    }
    return false;
}

bool oracle_has_d_path(const HostGraph& g, const std::vector<int>& verts,
                       std::uint32_t removed_mask, int d) {
    const int m = static_cast<int>(verts.size());
    if (m - __builtin_popcount(removed_mask) < d) return false;
    std::vector<int> local_of(static_cast<std::size_t>(g.capacity()), -1);
    for (int i = 0; i < m; ++i) local_of[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if ((removed_mask >> i) & 1u) continue;
        for (int w : g.neighbors(verts[static_cast<std::size_t>(i)])) {
            int j = local_of[static_cast<std::size_t>(w)];
            if (j >= 0 && !((removed_mask >> j) & 1u)) adj[static_cast<std::size_t>(i)].push_back(j);
        }
    }
    std::vector<char> visited(static_cast<std::size_t>(m), 0);
    std::vector<int> path;
    for (int s = 0; s < m; ++s) {
        if ((removed_mask >> s) & 1u) continue;
        visited.assign(static_cast<std::size_t>(m), 0);
        visited[static_cast<std::size_t>(s)] = 1;
        path.assign(1, s);
        if (oracle_path_exists(adj, path, visited, d)) return true;
    }
    return false;
}

}  // namespace

int opt_dpvc(const HostGraph& g, int d) {
    if (d < 2) throw std::invalid_argument("opt_dpvc: d must be at least 2");
    const std::vector<int> verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    if (n > 15) throw std::invalid_argument("opt_dpvc: refusing graphs above 15 vertices");
    if (!oracle_has_d_path(g, verts, 0, d)) return 0;
    const std::uint32_t all = (1u << n) - 1u;
    for (int size = 1; size <= n; ++size) {
        for (std::uint32_t mask = 1; mask <= all; ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            if (!oracle_has_d_path(g, verts, mask, d)) return size;
        }
    }
    return n;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "checks: " << checks << ", applications: " << applications
        << ", failures: " << failures.size() << ", seed: " << seed << "\n";
    for (const auto& f : failures) out << "FAIL " << f.description << "\n";
    return out.str();
}

namespace {

std::string describe_host(const HostGraph& g) {
    std::ostringstream out;
    out << "host n=" << g.vertex_count() << " edges:";
    for (int u : g.vertices())
        for (int v : g.neighbors(u))
            if (u < v) out << ' ' << u << '-' << v;
    return out.str();
}

bool bumpy_by_enumeration(const SmallGraph& g, int d) {
    HostGraph host = to_host_graph(g);
    std::vector<int> verts = host.vertices();
    return oracle_has_d_path(host, verts, 0, d);
}

}  // namespace

VerificationReport verify_rule_correctness(const SubgraphBranchingRule& rule, int d, int trials,
                                           std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_rule_correctness: trials must be positive");
    VerificationReport report;
    report.seed = seed;
    Rng rng(seed);
    const int pattern_size = rule.pattern.vertex_count();
    const int max_host = 11;
    const int lo = std::min(std::max(pattern_size, 2), max_host);
    const double biases[] = {0.0, 0.2, 0.5};
    const long max_attempts = static_cast<long>(trials) * 400;
    for (long attempt = 0; attempt < max_attempts && report.applications < trials; ++attempt) {
        const int n = lo + rng.below(max_host - lo + 1);
        const double bias = biases[rng.below(3)];
        const std::uint64_t host_seed = rng.next();
        HostGraph host = random_connected_graph(n, bias, host_seed);
        auto embedding = find_induced_embedding(host, rule.pattern, rule.red);
        if (!embedding) continue;
        ++report.applications;
        ++report.checks;
        const int direct = opt_dpvc(host, d);
        int via_branches = host.vertex_count() + 1;
        for (VertexSet branch : rule.branches) {
            std::vector<int> deleted = embedding->image_of(branch);
            via_branches = std::min(
                via_branches, static_cast<int>(deleted.size()) + opt_dpvc(host.without(deleted), d));
        }
        if (direct != via_branches) {
            std::ostringstream msg;
            msg << "rule-correctness: opt=" << direct << " but min over branches gives "
                << via_branches << " on " << describe_host(host) << " (host_seed=" << host_seed
                << ", embedding:";
            for (int p = 0; p < pattern_size; ++p)
                msg << ' ' << p << "->" << embedding->image[static_cast<std::size_t>(p)];
            msg << ")";
            report.failures.push_back(Counterexample{msg.str()});
        }
    }
    return report;
}

VerificationReport verify_exhaustive(const RuleList& rules, int d, const HandmadeRuleSet& handmade,
                                     std::uint64_t sample_seed) {
    if (rules.rules.empty())
        throw std::invalid_argument("verify_exhaustive: empty rule list has no defined psi");
    VerificationReport report;
    report.seed = sample_seed;
    const int psi = rules.psi();
    const int enumeration_bound = 9;

    auto check_graph = [&](const SmallGraph& g) {
        HostGraph host = to_host_graph(g);
        if (handmade.red_component && find_red_component(host, d)) return;
        if (handmade.red_star && find_red_star(host, d)) return;
        ++report.checks;
        for (const SubgraphBranchingRule& rule : rules.rules)
            if (find_induced_embedding(host, rule.pattern, rule.red)) return;
        report.failures.push_back(
            Counterexample{"exhaustiveness: no rule applies to uncovered " + describe_host(host)});
    };

    if (psi <= enumeration_bound) {
        std::vector<int> sizes = {psi};
        if (psi + 1 <= enumeration_bound) sizes.push_back(psi + 1);
        for (int size : sizes)
            for (const SmallGraph& g : enumerate_connected_graphs(size))
                if (bumpy_by_enumeration(g, d)) check_graph(g);
    } else {
        Rng rng(sample_seed);
        const int samples = 2000;
        for (int i = 0; i < samples; ++i) {
            const double biases[] = {0.0, 0.2, 0.5};
            HostGraph host = random_connected_graph(psi, biases[rng.below(3)], rng.next());
            std::vector<int> verts = host.vertices();
            if (!oracle_has_d_path(host, verts, 0, d)) continue;
            check_graph(to_small_graph(host, verts));
        }
    }
    return report;
}

}  // namespace dpvc::oracle

#include "dpvc/branching_rule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dpvc {

namespace {

double residual(const std::vector<int>& sizes, double x) {
    double sum = 0.0;
    for (int s : sizes) sum += std::pow(x, -static_cast<double>(s));
    return sum - 1.0;
}

double residual_derivative(const std::vector<int>& sizes, double x) {
    double sum = 0.0;
    for (int s : sizes) sum -= static_cast<double>(s) * std::pow(x, -static_cast<double>(s) - 1.0);
    return sum;
}

}  // namespace

double branching_factor(const std::vector<int>& branch_sizes) {
    if (branch_sizes.empty()) throw std::invalid_argument("branching_factor: no branches");
    for (int s : branch_sizes)
        if (s < 1) throw std::invalid_argument("branching_factor: branch size below 1");
    if (branch_sizes.size() == 1) return 1.0;

    // sum x^-s is strictly decreasing in x; the root lies in [1, #branches].
    double lo = 1.0;
    double hi = std::max(2.0, 2.0 * static_cast<double>(branch_sizes.size()));
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        if (residual(branch_sizes, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        double f = residual(branch_sizes, x);
        double df = residual_derivative(branch_sizes, x);
        if (df == 0.0) break;
        double next = x - f / df;
        if (next < 1.0) next = 1.0;
        x = next;
    }
    return x;
}

bool branch_less(VertexSet a, VertexSet b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    // Equal sizes: the branch owning the lowest differing vertex id comes
    // first in the sorted-id lexicographic order.
    VertexSet diff = static_cast<VertexSet>(a ^ b);
    VertexSet low = static_cast<VertexSet>(diff & static_cast<VertexSet>(-diff));
    return (a & low) != 0;
}

std::vector<int> branch_sizes(const std::vector<VertexSet>& branches) {
    std::vector<int> sizes;
    sizes.reserve(branches.size());
    for (VertexSet b : branches) sizes.push_back(popcount(b));
    return sizes;
}

SubgraphBranchingRule make_rule(SmallGraph pattern, VertexSet red,
                                std::vector<VertexSet> branches) {
    std::sort(branches.begin(), branches.end(), branch_less);
    return make_rule_keep_order(std::move(pattern), red, std::move(branches));
}

SubgraphBranchingRule make_rule_keep_order(SmallGraph pattern, VertexSet red,
                                           std::vector<VertexSet> branches) {
    if (branches.empty()) throw std::invalid_argument("rule: branch set must be nonempty");
    const VertexSet all = full_set(pattern.vertex_count());
    for (VertexSet b : branches)
        if (b == 0 || (b & ~all) != 0)
            throw std::invalid_argument("rule: branch outside the pattern vertex set");
    if ((red & ~all) != 0) throw std::invalid_argument("rule: red set outside the pattern");
    double factor = branching_factor(branch_sizes(branches));
    return SubgraphBranchingRule{std::move(pattern), red, std::move(branches), factor};
}

}  // namespace dpvc

#include "harm/host_metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace harm {

namespace {

double sum(const std::vector<double>& xs) { return std::accumulate(xs.begin(), xs.end(), 0.0); }
double max(const std::vector<double>& xs) { return *std::max_element(xs.begin(), xs.end()); }
double min(const std::vector<double>& xs) { return *std::min_element(xs.begin(), xs.end()); }

}  // namespace

double fold_impact(const AttackTreeNode& tree) {
    return fold_tree(
        tree, [](const Vulnerability& v) { return v.impact; }, sum, max);
}

double fold_prob(const AttackTreeNode& tree) {
    return fold_tree(
        tree, [](const Vulnerability& v) { return v.prob; },
        [](const std::vector<double>& xs) {
            double p = 1.0;
            for (double x : xs) p *= x;
            return p;
        },
        [](const std::vector<double>& xs) {
            double q = 1.0;
            for (double x : xs) q *= 1.0 - x;
            return 1.0 - q;
        });
}

double fold_risk(const AttackTreeNode& tree) {
    return fold_tree(
        tree, [](const Vulnerability& v) { return v.prob * v.impact; }, sum, max);
}

double fold_roa(const AttackTreeNode& tree) {
    return fold_tree(
        tree,
        [](const Vulnerability& v) {
            if (v.cost <= 0.0)
                throw std::domain_error("roa fold: leaf " + v.cve_id + " has non-positive cost");
            return v.prob * v.impact / v.cost;
        },
        sum, max);
}

double fold_cost(const AttackTreeNode& tree) {
    return fold_tree(
        tree, [](const Vulnerability& v) { return v.cost; }, sum, min);
}

HostMetrics host_metrics(const Host& host) {
    double cost = fold_cost(host.attack_tree);
    if (host.patched) return HostMetrics{0.0, 0.0, 0.0, 0.0, cost};
    return HostMetrics{
        fold_prob(host.attack_tree), fold_impact(host.attack_tree), fold_risk(host.attack_tree),
        fold_roa(host.attack_tree),  cost,
    };
}

}  // namespace harm

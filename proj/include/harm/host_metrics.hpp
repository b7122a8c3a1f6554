#pragma once

#include <vector>

#include "harm/model.hpp"

namespace harm {

/// Scalar folds of one host's attack tree.
struct HostMetrics {
    double prob;    // in [0, 1]
    double impact;  // >= 0
    double risk;    // <= impact
    double roa;
    double cost;  // > 0
};

/// Generic bottom-up fold: leaves map through `leaf`, gate results combine
/// through `and_join` / `or_join`, each taking the folded child values.
template <class Leaf, class AndJoin, class OrJoin>
double fold_tree(const AttackTreeNode& node, const Leaf& leaf, const AndJoin& and_join,
                 const OrJoin& or_join) {
    if (node.is_leaf()) return leaf(node.vulnerability());
    std::vector<double> folded;
    folded.reserve(node.children().size());
    for (const AttackTreeNode& child : node.children())
        folded.push_back(fold_tree(child, leaf, and_join, or_join));
    if (folded.size() == 1) return folded.front();  // one-child gates are the identity
    return node.gate_kind() == AttackTreeNode::Gate::And ? and_join(folded) : or_join(folded);
}

/// AND: sum of children, OR: max of children.
double fold_impact(const AttackTreeNode& tree);

/// AND: product, OR: 1 - prod(1 - p). Always lands in [0, 1].
double fold_prob(const AttackTreeNode& tree);

/// Leaf: prob * impact; AND: sum, OR: max.
double fold_risk(const AttackTreeNode& tree);

/// Leaf: prob * impact / cost; AND: sum, OR: max.
/// Throws std::domain_error naming the leaf when a leaf cost is not positive.
double fold_roa(const AttackTreeNode& tree);

/// Minimum attacker spend: AND: sum (every conjunct must be exploited),
/// OR: min (cheapest alternative).
double fold_cost(const AttackTreeNode& tree);

/// Bundles the five folds. A patched host reports zero probability, impact,
/// risk and roa; cost stays the tree fold.
HostMetrics host_metrics(const Host& host);

}  // namespace harm

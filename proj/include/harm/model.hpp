#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harm {

/// One exploitable weakness on a host, scored on the CVSS 0-10 scale.
struct Vulnerability {
    std::string cve_id;
    double base_score = 0.0;  // CVSS base score, in [0, 10]
    double prob = 0.0;        // probability of a successful exploit, in [0, 1]
    double impact = 0.0;      // damage on successful exploit, >= 0
    double cost = 1.0;        // attacker effort to exploit, > 0

    bool operator==(const Vulnerability&) const = default;
};

/// Node of a host's attack tree: either a vulnerability leaf or an AND/OR
/// gate over one or more children. Nodes are immutable values; the value
/// semantics make cycles unrepresentable.
class AttackTreeNode {
public:
    enum class Gate { And, Or };

    static AttackTreeNode leaf(Vulnerability v) {
        AttackTreeNode n;
        n.vuln_ = std::move(v);
        return n;
    }

    /// Throws std::invalid_argument when children is empty. A single-child
    /// gate is legal and folds to its child.
    static AttackTreeNode gate(Gate kind, std::vector<AttackTreeNode> children) {
        if (children.empty()) throw std::invalid_argument("attack tree gate requires at least one child");
        AttackTreeNode n;
        n.kind_ = kind;
        n.children_ = std::move(children);
        return n;
    }

    bool is_leaf() const { return vuln_.has_value(); }
    const Vulnerability& vulnerability() const { return *vuln_; }
    Gate gate_kind() const { return kind_; }
    std::span<const AttackTreeNode> children() const { return children_; }

    bool operator==(const AttackTreeNode&) const = default;

private:
    AttackTreeNode() = default;

    std::optional<Vulnerability> vuln_;
    Gate kind_ = Gate::Or;
    std::vector<AttackTreeNode> children_;
};

struct Host {
    std::string id;
    std::string name;
    double asset_value = 0.0;  // >= 0
    AttackTreeNode attack_tree;
    bool patched = false;  // neutralised: folds to zero probability and impact

    bool operator==(const Host&) const = default;
};

/// Reachability between hosts plus the attacker's entry edges. The attacker
/// node never appears as an edge destination.
struct AttackGraph {
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;

    bool has_edge(const std::string& src, const std::string& dst) const {
        return edges.contains({src, dst});
    }

    /// Successors of a node in ascending id order.
    std::vector<std::string> successors(const std::string& id) const;

    bool operator==(const AttackGraph&) const = default;
};

/// The full two-layer model: an attack graph over hosts (upper layer) and a
/// per-host attack tree over vulnerabilities (lower layer). Treated as
/// immutable after construction; every analysis is a pure function of it.
struct NetworkModel {
    std::map<std::string, Host> hosts;
    AttackGraph graph;
    std::string attacker_id;
    std::string target_id;

    bool operator==(const NetworkModel&) const = default;
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every model invariant and returns all violations found, each
/// naming the offending entity. Violations are the return value, never
/// exceptions.
ValidationResult validate_model(const NetworkModel& model);

/// The built-in seven-host example network, also shipped as
/// examples/paper-network.json: hosts h1..h7 behind two firewalls, one
/// vulnerability per host, an Internet attacker, and the database h7 as the
/// target.
NetworkModel example_network_model();

}  // namespace harm

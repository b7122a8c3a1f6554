// Test-only oracles and generators, kept independent of the library's
// computation paths: brute-force path enumeration, a direct recursive tree
// evaluator, random model/tree generators, and a structural check for the
// JSON report shape.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "harm/model.hpp"
#include "harm/paths.hpp"

namespace harm::testing {

// ---------------------------------------------------------------------------
// Brute-force path oracle: every vertex sequence without repeats, filtered by
// edge membership and endpoints.
// ---------------------------------------------------------------------------

inline void extend_sequences(const std::vector<std::string>& ids, std::vector<std::string>& current,
                             std::vector<bool>& used, std::vector<std::vector<std::string>>& out) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        current.push_back(ids[i]);
        out.push_back(current);
        extend_sequences(ids, current, used, out);
        current.pop_back();
        used[i] = false;
    }
}

inline std::vector<std::vector<std::string>> brute_force_paths(const NetworkModel& model) {
    std::vector<std::string> ids;
    for (const auto& [id, host] : model.hosts) ids.push_back(id);

    std::vector<std::vector<std::string>> sequences;
    std::vector<std::string> current;
    std::vector<bool> used(ids.size(), false);
    extend_sequences(ids, current, used, sequences);

    std::vector<std::vector<std::string>> accepted;
    for (const auto& sequence : sequences) {
        if (sequence.back() != model.target_id) continue;
        if (!model.graph.has_edge(model.attacker_id, sequence.front())) continue;
        bool connected = true;
        for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
            if (!model.graph.has_edge(sequence[i], sequence[i + 1])) {
                connected = false;
                break;
            }
        if (connected) accepted.push_back(sequence);
    }
    std::sort(accepted.begin(), accepted.end());
    return accepted;
}

inline std::vector<std::vector<std::string>> sorted_hosts(const PathSet& paths) {
    std::vector<std::vector<std::string>> out;
    for (const AttackPath& path : paths.paths) out.push_back(path.hosts);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Direct recursive fold oracle.
// ---------------------------------------------------------------------------

enum class FoldKind { Impact, Prob, Risk, Roa, Cost, BaseScore };

inline double oracle_fold(const AttackTreeNode& node, FoldKind kind) {
    if (node.is_leaf()) {
        const Vulnerability& v = node.vulnerability();
        switch (kind) {
            case FoldKind::Impact: return v.impact;
            case FoldKind::Prob: return v.prob;
            case FoldKind::Risk: return v.prob * v.impact;
            case FoldKind::Roa: return v.prob * v.impact / v.cost;
            case FoldKind::Cost: return v.cost;
            case FoldKind::BaseScore: return v.base_score;
        }
    }
    std::vector<double> values;
    for (const AttackTreeNode& child : node.children()) values.push_back(oracle_fold(child, kind));

    bool conjunctive = node.gate_kind() == AttackTreeNode::Gate::And;
    switch (kind) {
        case FoldKind::Impact:
        case FoldKind::Risk:
        case FoldKind::Roa:
        case FoldKind::BaseScore: {
            if (conjunctive) {
                double total = 0.0;
                for (double v : values) total += v;
                return total;
            }
            return *std::max_element(values.begin(), values.end());
        }
        case FoldKind::Prob: {
            double product = 1.0;
            if (conjunctive) {
                for (double v : values) product *= v;
                return product;
            }
            for (double v : values) product *= 1.0 - v;
            return 1.0 - product;
        }
        case FoldKind::Cost: {
            if (conjunctive) {
                double total = 0.0;
                for (double v : values) total += v;
                return total;
            }
            return *std::min_element(values.begin(), values.end());
        }
    }
    return 0.0;  // unreachable
}

// ---------------------------------------------------------------------------
// Random generators (always seeded by the caller for reproducibility).
// ---------------------------------------------------------------------------

inline Vulnerability random_vulnerability(std::mt19937& rng, int& counter) {
    std::uniform_real_distribution<double> base_score(0.0, 10.0);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    std::uniform_real_distribution<double> impact(0.0, 10.0);
    std::uniform_real_distribution<double> cost(0.1, 10.0);
    return Vulnerability{"CVE-T-" + std::to_string(++counter), base_score(rng), prob(rng),
                         impact(rng), cost(rng)};
}

inline AttackTreeNode random_tree(std::mt19937& rng, int& leaf_budget, int& counter, int depth = 0) {
    std::uniform_int_distribution<int> coin(0, 99);
    if (leaf_budget <= 1 || depth >= 3 || coin(rng) < 40) {
        --leaf_budget;
        return AttackTreeNode::leaf(random_vulnerability(rng, counter));
    }
    std::uniform_int_distribution<int> arity(1, std::min(4, leaf_budget));
    int child_count = arity(rng);
    std::vector<AttackTreeNode> children;
    for (int i = 0; i < child_count && leaf_budget > 0; ++i)
        children.push_back(random_tree(rng, leaf_budget, counter, depth + 1));
    AttackTreeNode::Gate gate =
        coin(rng) < 50 ? AttackTreeNode::Gate::And : AttackTreeNode::Gate::Or;
    return AttackTreeNode::gate(gate, std::move(children));
}

inline AttackTreeNode random_tree(std::mt19937& rng, int max_leaves) {
    std::uniform_int_distribution<int> leaves(1, max_leaves);
    int budget = leaves(rng);
    int counter = 0;
    return random_tree(rng, budget, counter);
}

/// A random valid model: up to `max_hosts` hosts, random edges (never into
/// the attacker, no self-loops), random target, small random attack trees.
inline NetworkModel random_model(std::mt19937& rng, int max_hosts = 7, int max_leaves = 3) {
    std::uniform_int_distribution<int> host_count_dist(1, max_hosts);
    std::uniform_real_distribution<double> asset(0.0, 50.0);
    std::uniform_int_distribution<int> coin(0, 99);

    int host_count = host_count_dist(rng);
    NetworkModel model;
    model.attacker_id = "attacker";
    model.graph.nodes.insert(model.attacker_id);

    std::vector<std::string> ids;
    for (int i = 1; i <= host_count; ++i) {
        std::string id = "h" + std::to_string(i);
        ids.push_back(id);
        Host host{id, id, asset(rng), random_tree(rng, max_leaves), false};
        model.graph.nodes.insert(id);
        model.hosts.emplace(id, std::move(host));
    }

    for (const std::string& id : ids)
        if (coin(rng) < 40) model.graph.edges.emplace(model.attacker_id, id);
    // Keep at least one entry edge so the graphs are not trivially empty.
    model.graph.edges.emplace(model.attacker_id, ids.front());

    for (const std::string& src : ids)
        for (const std::string& dst : ids)
            if (src != dst && coin(rng) < 30) model.graph.edges.emplace(src, dst);

    std::uniform_int_distribution<int> target(0, host_count - 1);
    model.target_id = ids[static_cast<std::size_t>(target(rng))];
    return model;
}

/// Rebuilds a tree with every leaf impact multiplied by `factor`.
inline AttackTreeNode scale_impacts(const AttackTreeNode& node, double factor) {
    if (node.is_leaf()) {
        Vulnerability v = node.vulnerability();
        v.impact *= factor;
        return AttackTreeNode::leaf(std::move(v));
    }
    std::vector<AttackTreeNode> children;
    for (const AttackTreeNode& child : node.children())
        children.push_back(scale_impacts(child, factor));
    return AttackTreeNode::gate(node.gate_kind(), std::move(children));
}

inline NetworkModel scale_model_impacts(const NetworkModel& model, double factor) {
    NetworkModel scaled = model;
    scaled.hosts.clear();
    for (const auto& [id, host] : model.hosts) {
        Host copy = host;
        copy.attack_tree = scale_impacts(host.attack_tree, factor);
        scaled.hosts.emplace(id, std::move(copy));
    }
    return scaled;
}

// ---------------------------------------------------------------------------
// Structural check of the JSON report shape:
//   {meta, paths, metrics: [{name, tags, value, per_path?, rendered, notes?}]}
// with an optional paper_deltas array. Returns an empty string when the
// document conforms, else the first problem found.
// ---------------------------------------------------------------------------

inline std::string check_report_schema(const nlohmann::json& doc) {
    using nlohmann::json;
    if (!doc.is_object()) return "root must be an object";
    for (const char* key : {"meta", "paths", "metrics"})
        if (!doc.contains(key)) return std::string("missing key ") + key;
    for (const auto& [key, value] : doc.items())
        if (key != "meta" && key != "paths" && key != "metrics" && key != "paper_deltas")
            return "unexpected key " + key;

    const json& meta = doc["meta"];
    if (!meta.is_object()) return "meta must be an object";
    if (!meta.contains("hosts") || !meta["hosts"].is_number_unsigned()) return "meta.hosts";
    if (!meta.contains("edges") || !meta["edges"].is_number_unsigned()) return "meta.edges";
    if (!meta.contains("attacker") || !meta["attacker"].is_string()) return "meta.attacker";
    if (!meta.contains("target") || !meta["target"].is_string()) return "meta.target";

    if (!doc["paths"].is_array()) return "paths must be an array";
    for (const json& row : doc["paths"]) {
        if (!row.is_object()) return "path row must be an object";
        if (!row.contains("index") || !row["index"].is_number_integer()) return "path.index";
        if (!row.contains("hosts") || !row["hosts"].is_array()) return "path.hosts";
        for (const json& host : row["hosts"])
            if (!host.is_string()) return "path.hosts entries must be strings";
        if (!row.contains("length") || !row["length"].is_number_unsigned()) return "path.length";
    }

    static const std::set<std::string> tag_vocabulary = {
        "host-based",     "network-based", "with-probability", "without-probability",
        "path-based",     "non-path-based", "composite",
    };
    if (!doc["metrics"].is_array()) return "metrics must be an array";
    std::set<std::string> seen;
    for (const json& metric : doc["metrics"]) {
        if (!metric.is_object()) return "metric must be an object";
        if (!metric.contains("name") || !metric["name"].is_string()) return "metric.name";
        std::string name = metric["name"].get<std::string>();
        if (!seen.insert(name).second) return "metric " + name + " appears twice";
        if (!metric.contains("tags") || !metric["tags"].is_array()) return "metric.tags";
        for (const json& tag : metric["tags"])
            if (!tag.is_string() || !tag_vocabulary.contains(tag.get<std::string>()))
                return "metric " + name + ": bad tag";
        if (!metric.contains("value") || !metric["value"].is_number()) return "metric.value";
        if (!metric.contains("rendered") || !metric["rendered"].is_string())
            return "metric.rendered";
        if (metric.contains("notes") && !metric["notes"].is_string()) return "metric.notes";
        for (const auto& [key, value] : metric.items())
            if (key != "name" && key != "tags" && key != "value" && key != "per_path" &&
                key != "rendered" && key != "notes")
                return "metric " + name + ": unexpected key " + key;
        if (metric.contains("per_path")) {
            if (!metric["per_path"].is_array()) return "metric.per_path";
            for (const json& row : metric["per_path"]) {
                if (!row.is_object() || !row.contains("path") || !row["path"].is_number_integer() ||
                    !row.contains("value") || !row["value"].is_number() ||
                    !row.contains("rendered") || !row["rendered"].is_string())
                    return "metric " + name + ": bad per_path row";
            }
        }
    }

    if (doc.contains("paper_deltas")) {
        if (!doc["paper_deltas"].is_array()) return "paper_deltas must be an array";
        for (const json& delta : doc["paper_deltas"])
            if (!delta.is_string()) return "paper_deltas entries must be strings";
    }
    return "";
}

}  // namespace harm::testing

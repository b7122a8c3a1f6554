#include "harm/model.hpp"

#include <sstream>

namespace harm {

std::vector<std::string> AttackGraph::successors(const std::string& id) const {
    std::vector<std::string> out;
    for (auto it = edges.lower_bound({id, std::string()}); it != edges.end() && it->first == id; ++it)
        out.push_back(it->second);
    return out;
}

namespace {

void check_tree(const std::string& host_id, const AttackTreeNode& node,
                std::vector<std::string>& violations) {
    if (node.is_leaf()) {
        const Vulnerability& v = node.vulnerability();
        std::ostringstream who;
        who << "host " << host_id << " leaf " << (v.cve_id.empty() ? "<unnamed>" : v.cve_id);
        if (v.cve_id.empty()) violations.push_back(who.str() + ": cve_id must be non-empty");
        if (v.base_score < 0.0 || v.base_score > 10.0)
            violations.push_back(who.str() + ": base_score must be in [0, 10]");
        if (v.prob < 0.0 || v.prob > 1.0) violations.push_back(who.str() + ": prob must be in [0, 1]");
        if (v.impact < 0.0) violations.push_back(who.str() + ": impact must be non-negative");
        if (v.cost <= 0.0) violations.push_back(who.str() + ": cost must be positive");
        return;
    }
    // Gates carry at least one child by construction.
    for (const AttackTreeNode& child : node.children()) check_tree(host_id, child, violations);
}

}  // namespace

ValidationResult validate_model(const NetworkModel& model) {
    ValidationResult result;
    auto& v = result.violations;

    for (const auto& [id, host] : model.hosts) {
        if (host.id != id) v.push_back("host map key " + id + " does not match host id " + host.id);
        if (host.asset_value < 0.0) v.push_back("host " + id + ": asset_value must be non-negative");
        check_tree(id, host.attack_tree, v);
    }

    for (const auto& [src, dst] : model.graph.edges) {
        if (!model.graph.nodes.contains(src)) v.push_back("unknown edge endpoint " + src);
        if (!model.graph.nodes.contains(dst)) v.push_back("unknown edge endpoint " + dst);
        if (src == dst) v.push_back("self-loop edge on " + src);
        if (dst == model.attacker_id) v.push_back("attacker cannot be an edge destination (edge " +
                                                  src + " -> " + dst + ")");
    }

    if (!model.hosts.contains(model.target_id))
        v.push_back("target " + model.target_id + " is not a declared host");
    if (model.hosts.contains(model.attacker_id))
        v.push_back("attacker " + model.attacker_id + " must not be a host");
    if (!model.graph.nodes.contains(model.attacker_id))
        v.push_back("attacker " + model.attacker_id + " is not a declared node");

    // The node set must be exactly the attacker plus the declared hosts.
    for (const auto& node : model.graph.nodes)
        if (node != model.attacker_id && !model.hosts.contains(node))
            v.push_back("graph declares unknown node " + node);
    for (const auto& [id, host] : model.hosts)
        if (!model.graph.nodes.contains(id)) v.push_back("graph is missing host node " + id);

    return result;
}

NetworkModel example_network_model() {
    auto host = [](std::string id, std::string cve, double base_score, double prob, double impact,
                   double cost, double asset) {
        Vulnerability v{std::move(cve), base_score, prob, impact, cost};
        return Host{id, id, asset, AttackTreeNode::leaf(std::move(v)), false};
    };

    NetworkModel m;
    m.attacker_id = "Internet";
    m.target_id = "h7";
    for (Host& h : std::vector<Host>{
             host("h1", "CVE-2016-2386", 7.5, 0.75, 7.0, 8.0, 40.0),
             host("h2", "CVE-2016-2040", 3.5, 0.35, 4.0, 4.2, 21.0),
             host("h3", "CVE-2016-0059", 4.3, 0.43, 5.0, 5.0, 25.0),
             host("h4", "CVE-2015-7974", 2.1, 0.21, 3.0, 3.5, 17.5),
             host("h5", "CVE-2015-2542", 9.3, 0.93, 9.0, 9.2, 46.0),
             host("h6", "CVE-2014-2706", 7.1, 0.71, 6.5, 7.5, 37.5),
             host("h7", "CVE-2013-2035", 4.4, 0.44, 4.3, 5.5, 27.5),
         }) {
        m.graph.nodes.insert(h.id);
        m.hosts.emplace(h.id, std::move(h));
    }
    m.graph.nodes.insert(m.attacker_id);
    m.graph.edges = {
        {"Internet", "h1"}, {"Internet", "h2"}, {"h1", "h3"}, {"h3", "h4"}, {"h2", "h5"},
        {"h2", "h6"},       {"h4", "h7"},       {"h5", "h7"}, {"h6", "h7"},
    };
    return m;
}

}  // namespace harm

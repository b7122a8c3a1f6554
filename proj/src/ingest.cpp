#include "harm/ingest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "harm/errors.hpp"

namespace harm {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require_field(const json& object, const char* key, const std::string& context) {
    auto it = object.find(key);
    if (it == object.end())
        throw ParseError(ParseErrorKind::MissingField, context + ": missing " + key);
    return *it;
}

std::string require_string(const json& object, const char* key, const std::string& context) {
    const json& value = require_field(object, key, context);
    if (!value.is_string())
        throw ParseError(ParseErrorKind::BadValue, context + ": " + key + " must be a string");
    return value.get<std::string>();
}

double require_number(const json& object, const char* key, const std::string& context) {
    const json& value = require_field(object, key, context);
    if (!value.is_number())
        throw ParseError(ParseErrorKind::BadValue, context + ": " + key + " must be a number");
    return value.get<double>();
}

AttackTreeNode parse_tree(const json& node, const std::string& context) {
    if (!node.is_object())
        throw ParseError(ParseErrorKind::BadValue, context + ": tree node must be an object");

    if (node.contains("gate")) {
        std::string kind = require_string(node, "gate", context);
        AttackTreeNode::Gate gate;
        if (kind == "and")
            gate = AttackTreeNode::Gate::And;
        else if (kind == "or")
            gate = AttackTreeNode::Gate::Or;
        else
            throw ParseError(ParseErrorKind::BadValue,
                             context + ": gate must be \"and\" or \"or\", got \"" + kind + "\"");

        const json& children = require_field(node, "children", context);
        if (!children.is_array() || children.empty())
            throw ParseError(ParseErrorKind::BadValue,
                             context + ": gate requires a non-empty children array");
        std::vector<AttackTreeNode> parsed;
        parsed.reserve(children.size());
        for (const json& child : children) parsed.push_back(parse_tree(child, context));
        return AttackTreeNode::gate(gate, std::move(parsed));
    }

    Vulnerability v;
    v.cve_id = require_string(node, "cve", context);
    v.base_score = require_number(node, "base_score", context);
    v.impact = require_number(node, "impact", context);
    v.cost = require_number(node, "cost", context);
    if (node.contains("prob")) {
        if (!node["prob"].is_number())
            throw ParseError(ParseErrorKind::BadValue, context + ": prob must be a number");
        v.prob = node["prob"].get<double>();
    } else {
        v.prob = v.base_score / 10.0;
    }
    return AttackTreeNode::leaf(std::move(v));
}

ordered_json serialize_tree(const AttackTreeNode& node) {
    ordered_json out;
    if (node.is_leaf()) {
        const Vulnerability& v = node.vulnerability();
        out["cve"] = v.cve_id;
        out["base_score"] = v.base_score;
        out["prob"] = v.prob;
        out["impact"] = v.impact;
        out["cost"] = v.cost;
        return out;
    }
    out["gate"] = node.gate_kind() == AttackTreeNode::Gate::And ? "and" : "or";
    ordered_json children = ordered_json::array();
    for (const AttackTreeNode& child : node.children()) children.push_back(serialize_tree(child));
    out["children"] = std::move(children);
    return out;
}

}  // namespace

NetworkModel parse_network_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& error) {
        throw ParseError(ParseErrorKind::Syntax, error.what());
    }
    if (!doc.is_object())
        throw ParseError(ParseErrorKind::BadValue, "document: root must be an object");

    std::string version = require_string(doc, "schema_version", "document");
    if (version != "1")
        throw ParseError(ParseErrorKind::SchemaVersion,
                         "document: unknown schema_version \"" + version + "\"");

    NetworkModel model;
    model.attacker_id = require_string(doc, "attacker", "document");
    model.target_id = require_string(doc, "target", "document");

    const json& hosts = require_field(doc, "hosts", "document");
    if (!hosts.is_array())
        throw ParseError(ParseErrorKind::BadValue, "document: hosts must be an array");
    for (const json& record : hosts) {
        if (!record.is_object())
            throw ParseError(ParseErrorKind::BadValue, "document: host record must be an object");
        std::string id = require_string(record, "id", "host record");
        std::string context = "host " + id;
        if (model.hosts.contains(id))
            throw ParseError(ParseErrorKind::DuplicateHost, "duplicate host id " + id);

        std::string name = record.contains("name") ? require_string(record, "name", context) : id;
        double asset_value =
            record.contains("asset_value") ? require_number(record, "asset_value", context) : 0.0;
        bool patched = false;
        if (record.contains("patched")) {
            if (!record["patched"].is_boolean())
                throw ParseError(ParseErrorKind::BadValue, context + ": patched must be a boolean");
            patched = record["patched"].get<bool>();
        }
        AttackTreeNode tree = parse_tree(require_field(record, "vulnerabilities", context), context);
        model.graph.nodes.insert(id);
        model.hosts.emplace(id,
                            Host{id, std::move(name), asset_value, std::move(tree), patched});
    }
    model.graph.nodes.insert(model.attacker_id);

    const json& edges = require_field(doc, "edges", "document");
    if (!edges.is_array())
        throw ParseError(ParseErrorKind::BadValue, "document: edges must be an array");
    for (const json& edge : edges) {
        if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string())
            throw ParseError(ParseErrorKind::BadValue,
                             "document: each edge must be a [src, dst] pair of strings");
        std::string src = edge[0].get<std::string>();
        std::string dst = edge[1].get<std::string>();
        for (const std::string& endpoint : {src, dst})
            if (!model.graph.nodes.contains(endpoint))
                throw ParseError(ParseErrorKind::DanglingEdge,
                                 "edge [" + src + ", " + dst + "] references unknown endpoint " +
                                     endpoint);
        model.graph.edges.emplace(std::move(src), std::move(dst));
    }

    ValidationResult check = validate_model(model);
    if (!check.ok()) {
        std::ostringstream msg;
        for (std::size_t i = 0; i < check.violations.size(); ++i) {
            if (i > 0) msg << "\n";
            msg << check.violations[i];
        }
        throw ParseError(ParseErrorKind::Validation, msg.str());
    }
    return model;
}

std::string serialize_network_spec(const NetworkModel& model) {
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["attacker"] = model.attacker_id;
    doc["target"] = model.target_id;

    ordered_json hosts = ordered_json::array();
    for (const auto& [id, host] : model.hosts) {  // std::map iterates in id order
        ordered_json record;
        record["id"] = host.id;
        record["name"] = host.name;
        record["asset_value"] = host.asset_value;
        if (host.patched) record["patched"] = true;
        record["vulnerabilities"] = serialize_tree(host.attack_tree);
        hosts.push_back(std::move(record));
    }
    doc["hosts"] = std::move(hosts);

    ordered_json edges = ordered_json::array();
    for (const auto& [src, dst] : model.graph.edges)  // std::set iterates lexicographically
        edges.push_back(ordered_json::array({src, dst}));
    doc["edges"] = std::move(edges);

    return doc.dump(2) + "\n";
}

NetworkModel load_network_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read input: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read input: " + path.string());
    return parse_network_spec(buffer.str());
}

}  // namespace harm

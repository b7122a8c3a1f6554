#include "harm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "harm/host_metrics.hpp"
#include "harm/network_metrics.hpp"

namespace harm {

namespace {

struct MetricSpec {
    const char* id;
    const char* name;
    const char* display;
    std::vector<std::string> tags;
};

const std::vector<MetricSpec>& catalog() {
    static const std::vector<MetricSpec> specs = {
        {"host-attack-impact", "aim_h", "Attack Impact (target host)",
         {"host-based", "without-probability"}},
        {"host-attack-cost", "ac_h", "Attack Cost (target host)",
         {"host-based", "without-probability"}},
        {"host-attack-probability", "pr_h", "Probability of Attack Success (target host)",
         {"host-based", "with-probability"}},
        {"shortest-path", "SP", "Shortest Attack Path", {"network-based", "path-based"}},
        {"number-of-paths", "NP", "Number of Attack Paths", {"network-based", "path-based"}},
        {"mean-path-length", "MPL", "Mean of Attack Path Lengths", {"network-based", "path-based"}},
        {"normalized-mean-path-length", "NMPL", "Normalised Mean of Path Lengths",
         {"network-based", "path-based"}},
        {"stddev-path-length", "SDPL", "Standard Deviation of Path Lengths",
         {"network-based", "path-based"}},
        {"mode-path-length", "MoPL", "Mode of Path Lengths", {"network-based", "path-based"}},
        {"median-path-length", "MePL", "Median of Path Lengths", {"network-based", "path-based"}},
        {"attack-resistance", "AR", "Attack Resistance", {"network-based", "path-based"}},
        {"ncp", "NCP", "Network Compromise Percentage", {"network-based", "non-path-based"}},
        {"vhp", "VHP", "Vulnerable Host Percentage", {"network-based", "non-path-based"}},
        {"composite-aim", "AIM", "Impact on Attack Paths",
         {"network-based", "path-based", "composite"}},
        {"composite-risk", "R", "Risk on Attack Paths",
         {"network-based", "path-based", "composite"}},
        {"composite-roa", "ROA", "Return on Attack Paths",
         {"network-based", "path-based", "composite"}},
        {"composite-roa-complement", "ROA(1-pr)", "Return on Attack Paths (complement variant)",
         {"network-based", "path-based", "composite"}},
        {"composite-pr", "Pr", "Probability of Attack Success on Paths",
         {"network-based", "path-based", "composite"}},
    };
    return specs;
}

std::set<std::string> resolve_selection(const ReportOptions& options) {
    std::set<std::string> known;
    for (const MetricSpec& spec : catalog()) known.insert(spec.id);

    std::set<std::string> selected;
    bool all = false;
    for (const std::string& id : options.metrics) {
        if (id == "all") {
            all = true;
            continue;
        }
        if (!known.contains(id)) throw std::invalid_argument("unknown metric: " + id);
        selected.insert(id);
    }
    if (all)
        for (const std::string& id : known)
            if (id != "ncp" || options.ncp_path) selected.insert(id);
    if (selected.contains("ncp") && !options.ncp_path)
        throw std::invalid_argument("metric ncp requires an exploited-path index (--ncp-path)");
    return selected;
}

std::string join(const std::vector<std::string>& parts, const char* separator) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += separator;
        out += parts[i];
    }
    return out;
}

}  // namespace

std::vector<std::string> metric_catalog() {
    std::vector<std::string> ids;
    ids.reserve(catalog().size());
    for (const MetricSpec& spec : catalog()) ids.push_back(spec.id);
    return ids;
}

std::string render_2dp(double value) {
    double scaled = value * 100.0;
    long long cents = value >= 0.0 ? static_cast<long long>(std::floor(scaled + 0.5))
                                   : -static_cast<long long>(std::floor(-scaled + 0.5));
    long long whole = cents / 100;
    long long frac = cents % 100;
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%s%lld.%02lld", (cents < 0 && whole == 0) ? "-" : "",
                  whole, std::llabs(frac));
    return buffer;
}

MetricReport build_report(const NetworkModel& model, const ReportOptions& options) {
    MetricReport report;
    report.meta = ModelSummary{model.hosts.size(), model.graph.edges.size(), model.attacker_id,
                               model.target_id};

    std::set<std::string> selected = resolve_selection(options);
    if (selected.empty()) return report;

    PathSet paths = enumerate_paths(model, options.path_cap);
    for (const AttackPath& path : paths.paths)
        report.paths.push_back(PathRow{path.index, path.hosts, path_length(path)});

    std::optional<CompositeBundle> composite;
    auto composite_bundle = [&]() -> const CompositeBundle& {
        if (!composite) composite = composite_metrics(model, paths);
        return *composite;
    };
    std::optional<HostMetrics> target_metrics;
    auto target_bundle = [&]() -> const HostMetrics& {
        if (!target_metrics) target_metrics = host_metrics(model.hosts.at(model.target_id));
        return *target_metrics;
    };

    for (const MetricSpec& spec : catalog()) {
        if (!selected.contains(spec.id)) continue;
        MetricEntry entry;
        entry.id = spec.id;
        entry.name = spec.name;
        entry.display = spec.display;
        entry.tags = spec.tags;
        std::string id = spec.id;

        if (id == "host-attack-impact") {
            entry.value = target_bundle().impact;
        } else if (id == "host-attack-cost") {
            entry.value = target_bundle().cost;
        } else if (id == "host-attack-probability") {
            entry.value = target_bundle().prob;
        } else if (id == "shortest-path") {
            entry.value = static_cast<double>(shortest_path(paths));
            entry.integral = true;
        } else if (id == "number-of-paths") {
            entry.value = static_cast<double>(number_of_paths(paths));
            entry.integral = true;
        } else if (id == "mean-path-length") {
            entry.value = mean_path_length(paths);
        } else if (id == "normalized-mean-path-length") {
            entry.value = normalized_mean_path_length(paths);
            entry.notes = "definition: MPL/NP";
        } else if (id == "stddev-path-length") {
            entry.value = stddev_path_length(paths);
        } else if (id == "mode-path-length") {
            ModePathLength mode = mode_path_length(paths);
            entry.value = static_cast<double>(mode.representative);
            entry.integral = true;
            std::ostringstream note;
            note << "modal set: {";
            for (std::size_t i = 0; i < mode.lengths.size(); ++i)
                note << (i > 0 ? ", " : "") << mode.lengths[i];
            note << "}";
            entry.notes = note.str();
        } else if (id == "median-path-length") {
            entry.value = median_path_length(paths);
        } else if (id == "attack-resistance") {
            entry.value = attack_resistance(model, paths);
        } else if (id == "ncp") {
            entry.value = ncp(model, paths, *options.ncp_path);
            entry.notes = "exploited path: " + std::to_string(*options.ncp_path);
        } else if (id == "vhp") {
            entry.value = vhp(model, paths);
        } else if (id == "composite-aim") {
            entry.value = composite_bundle().aim;
            for (const PathComposite& row : composite_bundle().per_path)
                entry.per_path.push_back(PerPathValue{row.path_index, row.aim});
        } else if (id == "composite-risk") {
            entry.value = composite_bundle().risk;
            for (const PathComposite& row : composite_bundle().per_path)
                entry.per_path.push_back(PerPathValue{row.path_index, row.risk});
        } else if (id == "composite-roa") {
            entry.value = composite_bundle().roa;
            for (const PathComposite& row : composite_bundle().per_path)
                entry.per_path.push_back(PerPathValue{row.path_index, row.roa});
        } else if (id == "composite-roa-complement") {
            std::vector<double> values = composite_roa_complement(model, paths);
            entry.value = *std::max_element(values.begin(), values.end());
            for (std::size_t i = 0; i < values.size(); ++i)
                entry.per_path.push_back(PerPathValue{static_cast<int>(i) + 1, values[i]});
            entry.notes = "cross-check variant: substitutes the complement probability (1 - pr)";
        } else if (id == "composite-pr") {
            entry.value = composite_bundle().pr;
            for (const PathComposite& row : composite_bundle().per_path)
                entry.per_path.push_back(PerPathValue{row.path_index, row.pr});
        }
        report.metrics.push_back(std::move(entry));
    }

    if (model == example_network_model()) {
        report.deltas = {
            "MPL: 10/3 = 3.33 at full precision; the reference analysis prints 3.30.",
            "NCP(path 1): 100 * 110 / 214.5 = 51.28%; the reference analysis prints 51.23%.",
            "Attack resistance: the serial-sum / parallel-harmonic recursion gives 8.49; "
            "the reference analysis prints 8.81.",
            "ROA: computed with the exploit success probabilities as given; the reference "
            "analysis substitutes their complements (1 - pr), giving 1.91 / 1.12 / 1.30.",
        };
    }
    return report;
}

namespace {

std::string render_json(const MetricReport& report) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["meta"] = ordered_json{{"hosts", report.meta.host_count},
                               {"edges", report.meta.edge_count},
                               {"attacker", report.meta.attacker},
                               {"target", report.meta.target}};

    ordered_json paths = ordered_json::array();
    for (const PathRow& row : report.paths)
        paths.push_back(ordered_json{{"index", row.index}, {"hosts", row.hosts}, {"length", row.length}});
    doc["paths"] = std::move(paths);

    ordered_json metrics = ordered_json::array();
    for (const MetricEntry& entry : report.metrics) {
        ordered_json m;
        m["name"] = entry.name;
        m["tags"] = entry.tags;
        if (entry.integral)
            m["value"] = static_cast<long long>(std::llround(entry.value));
        else
            m["value"] = entry.value;
        if (!entry.per_path.empty()) {
            ordered_json per_path = ordered_json::array();
            for (const PerPathValue& v : entry.per_path)
                per_path.push_back(ordered_json{
                    {"path", v.path}, {"value", v.value}, {"rendered", render_2dp(v.value)}});
            m["per_path"] = std::move(per_path);
        }
        m["rendered"] = render_2dp(entry.value);
        if (!entry.notes.empty()) m["notes"] = entry.notes;
        metrics.push_back(std::move(m));
    }
    doc["metrics"] = std::move(metrics);

    if (!report.deltas.empty()) doc["paper_deltas"] = report.deltas;
    return doc.dump(2) + "\n";
}

std::string render_text(const MetricReport& report) {
    std::ostringstream os;
    os << "HARM metric report\n";
    os << "==================\n";
    os << "hosts: " << report.meta.host_count << "  edges: " << report.meta.edge_count
       << "  attacker: " << report.meta.attacker << "  target: " << report.meta.target << "\n";
    if (report.metrics.empty()) return os.str();

    os << "\nattack paths (" << report.paths.size() << ")\n";
    if (report.paths.empty()) os << "  (none)\n";
    for (const PathRow& row : report.paths)
        os << "  " << row.index << ": (" << join(row.hosts, ", ") << ")  length " << row.length
           << "\n";

    std::size_t width = 0;
    for (const MetricEntry& entry : report.metrics) width = std::max(width, entry.display.size());
    width += 2;

    os << "\nmetrics\n";
    for (const MetricEntry& entry : report.metrics) {
        os << "  " << std::left << std::setw(static_cast<int>(width)) << entry.display
           << std::setw(9) << render_2dp(entry.value) << "[" << join(entry.tags, ", ") << "]\n";
        if (!entry.per_path.empty()) {
            os << "    per path: ";
            for (std::size_t i = 0; i < entry.per_path.size(); ++i)
                os << (i > 0 ? "; " : "") << entry.per_path[i].path << ": "
                   << render_2dp(entry.per_path[i].value);
            os << "\n";
        }
        if (!entry.notes.empty()) os << "    note: " << entry.notes << "\n";
    }

    if (!report.deltas.empty()) {
        os << "\nreference-analysis deltas\n";
        for (const std::string& delta : report.deltas) os << "  - " << delta << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_report(const MetricReport& report, OutputFormat format) {
    return format == OutputFormat::Json ? render_json(report) : render_text(report);
}

}  // namespace harm

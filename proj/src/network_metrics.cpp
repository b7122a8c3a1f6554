#include "harm/network_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "harm/errors.hpp"
#include "harm/host_metrics.hpp"

namespace harm {

namespace {

void require_paths(const PathSet& paths, const char* metric) {
    if (paths.empty())
        throw UnreachableTargetError(std::string(metric) + ": target unreachable (no attack paths)");
}

std::vector<std::size_t> lengths_of(const PathSet& paths) {
    std::vector<std::size_t> lengths;
    lengths.reserve(paths.size());
    for (const AttackPath& path : paths.paths) lengths.push_back(path_length(path));
    return lengths;
}

std::set<std::string> hosts_on_any_path(const PathSet& paths) {
    std::set<std::string> on_path;
    for (const AttackPath& path : paths.paths) on_path.insert(path.hosts.begin(), path.hosts.end());
    return on_path;
}

double vector_sum(const std::vector<double>& xs) {
    double total = 0.0;
    for (double x : xs) total += x;
    return total;
}

double vector_max(const std::vector<double>& xs) { return *std::max_element(xs.begin(), xs.end()); }

}  // namespace

std::size_t shortest_path(const PathSet& paths) {
    require_paths(paths, "shortest path");
    std::vector<std::size_t> lengths = lengths_of(paths);
    return *std::min_element(lengths.begin(), lengths.end());
}

std::size_t number_of_paths(const PathSet& paths) { return paths.size(); }

double mean_path_length(const PathSet& paths) {
    require_paths(paths, "mean path length");
    std::vector<std::size_t> lengths = lengths_of(paths);
    double total = 0.0;
    for (std::size_t length : lengths) total += static_cast<double>(length);
    return total / static_cast<double>(lengths.size());
}

double normalized_mean_path_length(const PathSet& paths) {
    require_paths(paths, "normalized mean path length");
    return mean_path_length(paths) / static_cast<double>(paths.size());
}

double stddev_path_length(const PathSet& paths) {
    require_paths(paths, "standard deviation of path lengths");
    double mean = mean_path_length(paths);
    double squares = 0.0;
    for (std::size_t length : lengths_of(paths)) {
        double deviation = static_cast<double>(length) - mean;
        squares += deviation * deviation;
    }
    return std::sqrt(squares / static_cast<double>(paths.size()));
}

ModePathLength mode_path_length(const PathSet& paths) {
    require_paths(paths, "mode of path lengths");
    std::map<std::size_t, std::size_t> frequency;
    for (std::size_t length : lengths_of(paths)) ++frequency[length];
    std::size_t best = 0;
    for (const auto& [length, count] : frequency) best = std::max(best, count);
    ModePathLength mode;
    for (const auto& [length, count] : frequency)
        if (count == best) mode.lengths.push_back(length);
    mode.representative = mode.lengths.front();
    return mode;
}

double median_path_length(const PathSet& paths) {
    require_paths(paths, "median of path lengths");
    std::vector<std::size_t> lengths = lengths_of(paths);
    std::sort(lengths.begin(), lengths.end());
    std::size_t n = lengths.size();
    if (n % 2 == 1) return static_cast<double>(lengths[n / 2]);
    return (static_cast<double>(lengths[n / 2 - 1]) + static_cast<double>(lengths[n / 2])) / 2.0;
}

double attack_resistance(const NetworkModel& model, const PathSet& paths) {
    require_paths(paths, "attack resistance");
    std::set<std::string> on_path = hosts_on_any_path(paths);

    auto difficulty = [&](const std::string& id) {
        return fold_tree(
            model.hosts.at(id).attack_tree, [](const Vulnerability& v) { return v.base_score; },
            vector_sum, vector_max);
    };

    // Predecessors and in-degrees within the path-restricted host graph.
    std::map<std::string, std::vector<std::string>> preds;
    std::map<std::string, std::size_t> indegree;
    for (const std::string& id : on_path) indegree[id] = 0;
    for (const auto& [src, dst] : model.graph.edges)
        if (on_path.contains(src) && on_path.contains(dst)) {
            preds[dst].push_back(src);
            ++indegree[dst];
        }

    std::deque<std::string> ready;
    for (const auto& [id, degree] : indegree)
        if (degree == 0) ready.push_back(id);

    std::map<std::string, double> resistance;
    std::size_t processed = 0;
    while (!ready.empty()) {
        std::string id = ready.front();
        ready.pop_front();
        ++processed;

        double own = difficulty(id);
        const std::vector<std::string>& sources = preds[id];
        if (model.graph.has_edge(model.attacker_id, id) || sources.empty()) {
            // A direct entry point: the attacker-side branch carries no
            // resistance, which dominates any parallel join.
            resistance[id] = own;
        } else if (sources.size() == 1) {
            resistance[id] = own + resistance.at(sources.front());
        } else {
            double inverse_sum = 0.0;
            for (const std::string& source : sources) {
                double upstream = resistance.at(source);
                if (upstream <= 0.0)
                    throw DegenerateResistanceError(
                        "attack resistance: zero-resistance branch through " + source);
                inverse_sum += 1.0 / upstream;
            }
            resistance[id] = own + 1.0 / inverse_sum;
        }

        for (const auto& [dst, sources_of_dst] : preds)
            if (std::find(sources_of_dst.begin(), sources_of_dst.end(), id) != sources_of_dst.end())
                if (--indegree[dst] == 0) ready.push_back(dst);
    }
    if (processed != on_path.size())
        throw DegenerateResistanceError("attack resistance: path-restricted graph contains a cycle");

    return resistance.at(model.target_id);
}

PathMetricsBundle path_metrics(const NetworkModel& model, const PathSet& paths) {
    return PathMetricsBundle{
        shortest_path(paths),        number_of_paths(paths),   mean_path_length(paths),
        normalized_mean_path_length(paths), stddev_path_length(paths), mode_path_length(paths),
        median_path_length(paths),   attack_resistance(model, paths),
    };
}

CompositeBundle composite_metrics(const NetworkModel& model, const PathSet& paths) {
    require_paths(paths, "composite metrics");

    std::map<std::string, HostMetrics> folded;
    auto metrics_of = [&](const std::string& id) -> const HostMetrics& {
        auto it = folded.find(id);
        if (it == folded.end()) it = folded.emplace(id, host_metrics(model.hosts.at(id))).first;
        return it->second;
    };

    CompositeBundle bundle{0.0, 0.0, 0.0, 0.0, {}};
    for (const AttackPath& path : paths.paths) {
        PathComposite row{path.index, 0.0, 0.0, 0.0, 1.0};
        for (const std::string& id : path.hosts) {
            const HostMetrics& hm = metrics_of(id);
            if (hm.cost <= 0.0)
                throw std::domain_error("composite metrics: host " + id + " has non-positive cost");
            row.aim += hm.impact;
            row.risk += hm.prob * hm.impact;
            row.roa += hm.prob * hm.impact / hm.cost;
            row.pr *= hm.prob;
        }
        bundle.per_path.push_back(row);
    }

    bundle.aim = bundle.per_path.front().aim;
    bundle.risk = bundle.per_path.front().risk;
    bundle.roa = bundle.per_path.front().roa;
    bundle.pr = bundle.per_path.front().pr;
    for (const PathComposite& row : bundle.per_path) {
        bundle.aim = std::max(bundle.aim, row.aim);
        bundle.risk = std::max(bundle.risk, row.risk);
        bundle.roa = std::max(bundle.roa, row.roa);
        bundle.pr = std::max(bundle.pr, row.pr);
    }
    return bundle;
}

std::vector<double> composite_roa_complement(const NetworkModel& model, const PathSet& paths) {
    require_paths(paths, "composite roa (complement variant)");
    std::vector<double> values;
    values.reserve(paths.size());
    for (const AttackPath& path : paths.paths) {
        double total = 0.0;
        for (const std::string& id : path.hosts) {
            HostMetrics hm = host_metrics(model.hosts.at(id));
            if (hm.cost <= 0.0)
                throw std::domain_error("composite metrics: host " + id + " has non-positive cost");
            total += (1.0 - hm.prob) * hm.impact / hm.cost;
        }
        values.push_back(total);
    }
    return values;
}

double ncp(const NetworkModel& model, const PathSet& paths, int exploited_index) {
    if (exploited_index < 1 || static_cast<std::size_t>(exploited_index) > paths.size())
        throw std::out_of_range("ncp: path index " + std::to_string(exploited_index) +
                                " out of range (1.." + std::to_string(paths.size()) + ")");

    const AttackPath& exploited = paths.paths[static_cast<std::size_t>(exploited_index) - 1];
    double numerator = 0.0;
    for (const std::string& id : exploited.hosts) numerator += model.hosts.at(id).asset_value;

    double denominator = 0.0;
    for (const std::string& id : hosts_on_any_path(paths)) denominator += model.hosts.at(id).asset_value;

    if (denominator == 0.0) return 0.0;
    return 100.0 * numerator / denominator;
}

NonPathBundle non_path_metrics(const NetworkModel& model, const PathSet& paths,
                               int exploited_index) {
    return NonPathBundle{ncp(model, paths, exploited_index), vhp(model, paths)};
}

double vhp(const NetworkModel& model, const PathSet& paths) {
    require_paths(paths, "vhp");
    std::set<std::string> on_path = hosts_on_any_path(paths);
    std::size_t vulnerable = 0;
    for (const std::string& id : on_path)
        if (!model.hosts.at(id).patched) ++vulnerable;
    return 100.0 * static_cast<double>(vulnerable) / static_cast<double>(on_path.size());
}

}  // namespace harm

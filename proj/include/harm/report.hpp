#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "harm/model.hpp"
#include "harm/paths.hpp"

namespace harm {

enum class OutputFormat { Text, Json };

struct ModelSummary {
    std::size_t host_count;
    std::size_t edge_count;
    std::string attacker;
    std::string target;
};

struct PathRow {
    int index;
    std::vector<std::string> hosts;
    std::size_t length;
};

struct PerPathValue {
    int path;
    double value;
};

struct MetricEntry {
    std::string id;       // stable kebab-case selector
    std::string name;     // short name used in machine output
    std::string display;  // table row label
    std::vector<std::string> tags;
    double value = 0.0;
    bool integral = false;  // emit as an exact integer in machine output
    std::vector<PerPathValue> per_path;
    std::string notes;
};

struct MetricReport {
    ModelSummary meta;
    std::vector<PathRow> paths;
    std::vector<MetricEntry> metrics;
    std::vector<std::string> deltas;  // reference-analysis deltas, fixture runs only
};

struct ReportOptions {
    /// Metric ids to compute; "all" expands to the full catalog (minus ncp
    /// when no exploited path is given). Empty means model summary only.
    std::vector<std::string> metrics;
    std::optional<int> ncp_path;  // 1-based exploited path, required for ncp
    std::size_t path_cap = kDefaultPathCap;
};

/// The metric ids accepted in ReportOptions::metrics, in report order.
std::vector<std::string> metric_catalog();

/// Computes the selected metrics. Throws std::invalid_argument on unknown
/// metric ids or when ncp is selected without an exploited path; path and
/// metric errors propagate from the underlying operations.
MetricReport build_report(const NetworkModel& model, const ReportOptions& options);

/// Deterministic rendering. Text shows values rounded to two decimals; json
/// carries full-precision values plus a "rendered" two-decimal field.
std::string render_report(const MetricReport& report, OutputFormat format);

/// Presentation rounding: half-up to two decimals.
std::string render_2dp(double value);

}  // namespace harm

#pragma once

#include <cstddef>
#include <vector>

#include "harm/model.hpp"
#include "harm/paths.hpp"

namespace harm {

struct ModePathLength {
    std::vector<std::size_t> lengths;  // all lengths with maximal frequency, ascending
    std::size_t representative;        // smallest member of the modal set
};

struct PathMetricsBundle {
    std::size_t sp;
    std::size_t np;
    double mpl;
    double nmpl;
    double sdpl;
    ModePathLength mopl;
    double mepl;
    double resistance;
};

struct PathComposite {
    int path_index;
    double aim;
    double risk;
    double roa;
    double pr;
};

struct CompositeBundle {
    double aim;
    double risk;
    double roa;
    double pr;
    std::vector<PathComposite> per_path;
};

struct NonPathBundle {
    double ncp;  // percent in [0, 100]
    double vhp;  // percent in [0, 100]
};

// Every operation below that requires a non-empty PathSet throws
// UnreachableTargetError when it is empty.

/// Minimum path length.
std::size_t shortest_path(const PathSet& paths);

/// Count of paths; zero is permitted.
std::size_t number_of_paths(const PathSet& paths);

/// Arithmetic mean of path lengths, full precision.
double mean_path_length(const PathSet& paths);

/// Mean path length divided by the number of paths.
double normalized_mean_path_length(const PathSet& paths);

/// Population standard deviation of path lengths (divisor = path count).
double stddev_path_length(const PathSet& paths);

/// All most-frequent lengths, plus the smallest of them as representative.
ModePathLength mode_path_length(const PathSet& paths);

/// Middle of the sorted lengths; mean of the two middle values when the
/// count is even.
double median_path_length(const PathSet& paths);

/// Cumulative resistance at the target over the path-restricted graph, in
/// topological order. A host's own difficulty is its attack tree's base
/// scores folded like impact (AND: sum, OR: max). Hosts entered directly
/// from the attacker start at their own difficulty; a single predecessor
/// adds serially; two or more predecessors combine harmonically:
///   R(h) = r(h) + 1 / sum(1 / R(p)).
/// Throws DegenerateResistanceError on a zero-resistance parallel branch or
/// a cyclic path-restricted graph.
double attack_resistance(const NetworkModel& model, const PathSet& paths);

/// All eight path-based metrics in one bundle.
PathMetricsBundle path_metrics(const NetworkModel& model, const PathSet& paths);

/// Per-path impact, risk, return-on-attack and success probability, plus
/// their maxima over all paths:
///   aim_ap = sum of host impacts       risk_ap = sum of prob * impact
///   roa_ap = sum of prob * impact / cost   pr_ap = product of host probs
/// Host values are the attack-tree folds.
CompositeBundle composite_metrics(const NetworkModel& model, const PathSet& paths);

/// Cross-check variant of the per-path return on attack that substitutes the
/// complement probability (1 - prob) for each host. Returned in path order.
std::vector<double> composite_roa_complement(const NetworkModel& model, const PathSet& paths);

/// Asset-weighted share of path hosts compromised via the exploited path:
/// 100 * (assets on the exploited path) / (assets on the union of all path
/// hosts). Throws std::out_of_range when exploited_index (1-based) does not
/// name a path.
double ncp(const NetworkModel& model, const PathSet& paths, int exploited_index);

/// Both non-path metrics in one bundle.
NonPathBundle non_path_metrics(const NetworkModel& model, const PathSet& paths,
                               int exploited_index);

/// Share of on-path hosts that carry at least one live vulnerability;
/// patched hosts count as non-vulnerable.
double vhp(const NetworkModel& model, const PathSet& paths);

}  // namespace harm

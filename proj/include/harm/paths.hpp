#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "harm/model.hpp"

namespace harm {

/// A simple attacker-to-target host sequence. The attacker node itself is
/// not part of the list; the first host is attacker-adjacent and the last
/// host is the target.
struct AttackPath {
    std::vector<std::string> hosts;
    int index = 0;  // 1-based position in the enumeration

    bool operator==(const AttackPath&) const = default;
};

struct PathSet {
    std::vector<AttackPath> paths;

    bool empty() const { return paths.empty(); }
    std::size_t size() const { return paths.size(); }

    bool operator==(const PathSet&) const = default;
};

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// Enumerates every simple path from the attacker to the target, each
/// exactly once, depth-first with successors visited in ascending host-id
/// order. The result may be empty (target unreachable).
///
/// Throws std::invalid_argument when the model fails validate_model, and
/// PathCapExceededError when more than `cap` paths exist.
PathSet enumerate_paths(const NetworkModel& model, std::size_t cap = kDefaultPathCap);

/// Number of hosts on the path.
std::size_t path_length(const AttackPath& path);

}  // namespace harm

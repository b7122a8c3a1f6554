#include "harm/paths.hpp"

#include <set>
#include <sstream>

#include "harm/errors.hpp"

namespace harm {

namespace {

struct Enumeration {
    const NetworkModel& model;
    std::size_t cap;
    std::vector<std::string> current;
    std::set<std::string> visited;
    std::vector<AttackPath> found;

    void visit(const std::string& host) {
        current.push_back(host);
        visited.insert(host);
        if (host == model.target_id) {
            if (found.size() >= cap) throw PathCapExceededError(cap);
            found.push_back(AttackPath{current, 0});
        } else {
            // A simple path that passes through the target could never end
            // on it again, so recursion past the target is pruned entirely.
            for (const std::string& next : model.graph.successors(host))
                if (!visited.contains(next)) visit(next);
        }
        visited.erase(host);
        current.pop_back();
    }
};

}  // namespace

PathSet enumerate_paths(const NetworkModel& model, std::size_t cap) {
    ValidationResult check = validate_model(model);
    if (!check.ok()) {
        std::ostringstream msg;
        msg << "enumerate_paths requires a valid model; violations:";
        for (const std::string& violation : check.violations) msg << "\n  " << violation;
        throw std::invalid_argument(msg.str());
    }

    Enumeration walk{model, cap, {}, {}, {}};
    for (const std::string& entry : model.graph.successors(model.attacker_id)) walk.visit(entry);

    PathSet result{std::move(walk.found)};
    for (std::size_t i = 0; i < result.paths.size(); ++i) result.paths[i].index = static_cast<int>(i) + 1;
    return result;
}

std::size_t path_length(const AttackPath& path) { return path.hosts.size(); }

}  // namespace harm

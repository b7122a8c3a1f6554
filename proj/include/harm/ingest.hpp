#pragma once

#include <filesystem>
#include <string>

#include "harm/model.hpp"

namespace harm {

/// Parses a schema_version "1" network description.
///
/// Document layout:
///
///   {
///     "schema_version": "1",
///     "attacker": "<node id>",
///     "target": "<host id>",
///     "hosts": [
///       {
///         "id": "...", "name": "...", "asset_value": <number>,
///         "patched": <bool, optional>,
///         "vulnerabilities": <tree>
///       },
///       ...
///     ],
///     "edges": [["src", "dst"], ...]
///   }
///
/// A tree is either a leaf {"cve", "base_score", "impact", "cost", "prob"?}
/// or a gate {"gate": "and"|"or", "children": [<tree>, ...]}. A bare leaf
/// covers the common single-vulnerability host. When prob is absent it
/// defaults to base_score / 10.
///
/// Throws ParseError; the kind distinguishes syntax errors (with position),
/// unknown schema versions, duplicate host ids, dangling edge endpoints,
/// missing fields, bad values, and model invariant violations.
NetworkModel parse_network_spec(const std::string& text);

/// Canonical rendering: hosts sorted by id, edges sorted lexicographically,
/// fixed key order, two-space indentation, explicit prob on every leaf.
/// parse(serialize(m)) == m for every valid model.
std::string serialize_network_spec(const NetworkModel& model);

/// Reads and parses a network description file.
/// Throws IoError when the file cannot be read.
NetworkModel load_network_file(const std::filesystem::path& path);

}  // namespace harm

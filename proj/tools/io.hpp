#pragma once

#include "bsg/checks.hpp"
#include "bsg/cocycle.hpp"
#include "bsg/groupoid.hpp"
#include "bsg/tree.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bsg::io {

using Json = nlohmann::ordered_json;

inline constexpr int kGroupoidSchema = 1;

// {"schema": 1, "units": [{"id", "mass"}], "arrows": [{"id", "source", "range", "inverse", "label"}],
//  "product": [[g, h, gh], ...]}
Json groupoid_to_json(const Groupoid& g);
// Table-mode groupoid; structural problems throw ParseError, axiom problems are left to validate_axioms.
Groupoid groupoid_from_json(const Json& j);

// {"target": "Q+" | "Z" | "Z/n", "values": {"<arrow>": "<value>"}}
Json cocycle_to_json(const Cocycle& c);
Cocycle cocycle_from_json(const Json& j, int num_arrows);
Target parse_target(const std::string& s);

Json type_to_json(const TypeLabel& t);
Json geodesic_to_json(const std::vector<TreeEdge>& path);
Json check_to_json(const CheckResult& r);
Json mackey_to_json(const MackeyRange& m);

// Arrow-id lists for subgroupoids ("0,3,5"; the units are always added) and unit sets.
std::vector<int> parse_id_list(const std::string& s);
Subgroupoid subgroupoid_from_ids(const Groupoid& g, const std::vector<int>& ids);
Json ids_to_json(const std::vector<int>& ids);

Json read_json_file(const std::string& path);

}  // namespace bsg::io

// JSON wire formats and DOT export for every value the CLI reads or writes.
#pragma once

#include <string>

#include <json.hpp>

#include "gms/fraisse.hpp"
#include "gms/graph.hpp"
#include "gms/omission.hpp"
#include "gms/semiarch.hpp"
#include "gms/sigma.hpp"
#include "gms/witness.hpp"

namespace gms {

// Monoids serialize as {"kind":"truncated","n":3}, {"kind":"max_chain","n":3}
// or {"kind":"table","labels":[...],"plus":[[...]]}; the compact forms are
// used whenever the table matches them.
nlohmann::json monoid_to_json(const DistanceMonoid& m);
DistanceMonoid monoid_from_json(const nlohmann::json& j);

nlohmann::json monoid_violation_to_json(const MonoidViolation& v,
                                        const std::vector<std::string>& labels);
nlohmann::json space_violation_to_json(const SpaceViolation& v,
                                       const std::vector<std::string>& points);

// {"monoid":..., "points":[...], "dist":[[element indices]]}
nlohmann::json space_to_json(const MetricSpace& s);
MetricSpace space_from_json(const nlohmann::json& j);

// {"monoid":..., "vertices":[...], "edges":[["a","b",labelIndex],...]}
nlohmann::json labeled_graph_to_json(const LabeledGraph& g);
LabeledGraph labeled_graph_from_json(const nlohmann::json& j);

// Partial point maps serialize as {"from":"to", ...} label objects.
nlohmann::json partial_map_to_json(const PartialIsometry& phi,
                                   const std::vector<std::string>& source,
                                   const std::vector<std::string>& target);
PartialIsometry partial_map_from_json(const nlohmann::json& j,
                                      const std::vector<std::string>& source,
                                      const std::vector<std::string>& target);

nlohmann::json witness_to_json(const EppaWitness& w);
EppaWitness witness_from_json(const nlohmann::json& j);

nlohmann::json forbidden_class_to_json(const ForbiddenClass& f);
ForbiddenClass forbidden_class_from_json(const nlohmann::json& j);

nlohmann::json sigma_system_to_json(const SigmaSystem& sys);
SigmaSystem sigma_system_from_json(const nlohmann::json& j);

nlohmann::json path_extension_to_json(const PathExtension& e);
PathExtension path_extension_from_json(const nlohmann::json& j);

nlohmann::json saturation_report_to_json(const SaturationReport& r);
SaturationReport saturation_report_from_json(const nlohmann::json& j);

// One edge per point pair labeled with the monoid label; with omit_max, pairs
// at the monoid maximum are dropped.
std::string space_to_dot(const MetricSpace& s, bool omit_max);

}  // namespace gms

#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "endscope/compactness.hpp"
#include "endscope/components.hpp"
#include "endscope/ends.hpp"
#include "endscope/isometry.hpp"
#include "endscope/space.hpp"
#include "endscope/theorem1.hpp"

namespace endscope {

inline constexpr const char* kToolVersion = "0.1.0";

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using SpaceInput = std::variant<MetricSpace, NetworkSpace>;

// Parses one of the three input kinds:
//   { "kind": "metric",  "points": [...], "d": [[...]], "rho": {...} }
//   { "kind": "network", "vertices": [...], "edges": [[u,v,"w"]...],
//     "basepoint": ..., "cap": "num/den"? }
//   { "kind": "catalog", "family": ..., "params": {...}, "level": n }
// All rationals are "num/den" strings. Throws ParseError on malformed
// input; semantic violations (invalid metric, bad rho) surface as
// std::invalid_argument from the builders.
SpaceInput parse_space_json(const std::string& text);

// Class-A input before validation, so violations can be reported as
// findings rather than build failures.
struct RawMetricInput {
  std::vector<std::string> points;
  DistanceMatrix d;
  RhoSpec rho_spec;
};
// Returns the raw form for "metric" inputs, nullopt for the other kinds.
std::optional<RawMetricInput> parse_metric_raw(const std::string& text);

// FNV-1a of the input text, as fixed-width hex.
std::string input_digest(const std::string& text);

// Report builders. All numbers serialize as "num/den" or "inf"; key order
// is fixed, so identical input yields byte-identical reports.
nlohmann::ordered_json report_header(const std::string& digest);
nlohmann::ordered_json validation_to_json(const ValidationReport& report,
                                          const std::vector<std::string>& ids);
nlohmann::ordered_json rho_to_json(const RhoFunction& rho,
                                   const std::vector<std::string>& ids);
nlohmann::ordered_json partition_to_json(const ComponentPartition& partition,
                                         const std::vector<std::string>& node_names);
nlohmann::ordered_json ends_to_json(const EndsEstimate& estimate);
nlohmann::ordered_json properness_to_json(const PropernessReport& report,
                                          const NetworkSpace& space);
nlohmann::ordered_json structure_to_json(const StructureReport& report);

std::vector<std::string> point_names(const MetricSpace& space);
std::vector<std::string> vertex_names(const NetworkSpace& space);
// Quotient node names for a class-B partition: one per graph component.
std::vector<std::string> component_names(const NetworkSpace& space);

}  // namespace endscope

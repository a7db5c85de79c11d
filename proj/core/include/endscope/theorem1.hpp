#pragma once

#include <string>
#include <vector>

#include "endscope/ends.hpp"
#include "endscope/isometry.hpp"

namespace endscope {

// Structural check for one-ended non-compact catalog spaces: the
// pseudo-component partition must have finitely many classes with exactly
// one non-compact class, a compact (here: finite) remainder, and the
// isometry group must act properly on the non-compact class. A failed
// assertion is a red flag: it signals a model bug, since the structure is
// forced for every genuine one-ended space.
struct StructureReport {
  bool applicable = false;     // hypothesis: one end, non-compact
  std::string gate_rationale;
  EndsEstimate ends;

  int class_count = 0;
  int non_compact_classes = 0;
  long long compact_rest_vertices = 0;  // at the inspected level

  bool properness_available = false;
  std::string group_description;
  PropernessReport properness;

  std::vector<std::string> red_flags;
  bool pass() const { return red_flags.empty(); }
};

StructureReport theorem1_check(const std::string& family,
                               const std::map<std::string, std::string>& params,
                               int level, const EndsSchedule& schedule);

}  // namespace endscope

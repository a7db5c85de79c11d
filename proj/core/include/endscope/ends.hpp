#pragma once

#include <map>
#include <string>
#include <vector>

#include "endscope/space.hpp"

namespace endscope {

// Per-level end estimate. verdict finite(k) requires the escaping-
// component count to equal k across the whole stabilization window;
// unbounded requires strictly increasing counts across it.
struct EndsEstimate {
  enum class Verdict { Compact, Finite, Unbounded, Inconclusive };

  struct Row {
    int level;
    Rational radius;
    int escaping;
  };

  std::vector<Row> rows;
  Verdict verdict = Verdict::Inconclusive;
  int end_count = 0;  // meaningful for Finite
  bool stabilized = false;

  std::string verdict_string() const;
};

// Number of connected components of (level graph minus the closed ball
// of radius r around the basepoint, in the uncapped path metric) that
// touch a boundary-marked vertex. Components clear of the marks are
// transient and not counted. Requires r below the level's certified
// stable radius: the uncapped distance from the basepoint to the nearest
// boundary mark in its own graph component.
int escaping_components(const NetworkSpace& space, const Rational& r);

// Largest radius the level certifies; infinite when the basepoint's
// component carries no boundary marks.
ExtRational certified_radius(const NetworkSpace& space);

struct EndsSchedule {
  struct Entry {
    int level;
    Rational radius;
  };
  std::vector<Entry> entries;
  int window = 4;
};

// Default schedule for a catalog family: levels first_level..max_level
// with radius just under each level's certified stable radius. Caps are
// ignored throughout: a cap changes the metric, not the topology.
EndsSchedule default_schedule(const std::string& family,
                              const std::map<std::string, std::string>& params,
                              int max_level, int window = 4,
                              int first_level = 2);

EndsEstimate count_ends(const std::string& family,
                        const std::map<std::string, std::string>& params,
                        const EndsSchedule& schedule);

struct JSpaceVerdict {
  enum class Value { Yes, No, Inconclusive };
  Value value = Value::Inconclusive;
  std::string rationale;
  EndsEstimate ends;
};

// One-ended and non-compact. Compact spaces answer no; an inconclusive
// end count propagates.
JSpaceVerdict is_j_space(const std::string& family,
                         const std::map<std::string, std::string>& params,
                         const EndsSchedule& schedule);

}  // namespace endscope

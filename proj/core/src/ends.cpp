#include "endscope/ends.hpp"

#include <stdexcept>

#include "endscope/catalog.hpp"

namespace endscope {

std::string EndsEstimate::verdict_string() const {
  switch (verdict) {
    case Verdict::Compact: return "compact";
    case Verdict::Finite: return "finite(" + std::to_string(end_count) + ")";
    case Verdict::Unbounded: return "unbounded";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ExtRational certified_radius(const NetworkSpace& space) {
  auto dist = space.base_distances();
  ExtRational best = ExtRational::infinity();
  for (int v = 0; v < space.graph.vertex_count(); ++v)
    if (space.boundary_mark[v] && dist[v] < best) best = dist[v];
  return best;
}

int escaping_components(const NetworkSpace& space, const Rational& r) {
  if (r <= 0) throw std::invalid_argument("radius must be positive");
  if (!(ExtRational(r) < certified_radius(space)))
    throw std::invalid_argument(
        "radius exceeds the level's certified stable radius; deepen the level");

  auto dist = space.base_distances();
  const int n = space.graph.vertex_count();
  ExtRational radius{r};
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) removed[v] = dist[v] <= radius;  // closed ball

  std::vector<int> comp(n, -1);
  std::vector<int> stack;
  int count = 0;
  int escaping = 0;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    bool touches_boundary = false;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (space.boundary_mark[v]) touches_boundary = true;
      for (const auto& [w, len] : space.graph.neighbors(v))
        if (!removed[w] && comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
    if (touches_boundary) ++escaping;
  }
  return escaping;
}

EndsSchedule default_schedule(const std::string& family,
                              const std::map<std::string, std::string>& params,
                              int max_level, int window, int first_level) {
  if (first_level < 2) first_level = 2;
  EndsSchedule schedule;
  schedule.window = window;
  for (int level = first_level; level <= max_level; ++level) {
    NetworkSpace space = catalog_family(family, params, level);
    ExtRational stable = certified_radius(space);
    Rational radius = stable.is_infinite()
                          ? Rational(level)
                          : stable.finite() * Rational(level - 1, level);
    if (radius <= 0) continue;
    schedule.entries.push_back({level, std::move(radius)});
  }
  return schedule;
}

EndsEstimate count_ends(const std::string& family,
                        const std::map<std::string, std::string>& params,
                        const EndsSchedule& schedule) {
  EndsEstimate estimate;
  bool compact_space = true;
  for (const auto& entry : schedule.entries) {
    NetworkSpace space = catalog_family(family, params, entry.level);
    if (!space.is_compact()) compact_space = false;
    int escaping = escaping_components(space, entry.radius);
    estimate.rows.push_back({entry.level, entry.radius, escaping});
  }
  if (schedule.entries.empty()) {
    NetworkSpace space = catalog_family(family, params, 1);
    compact_space = space.is_compact();
  }

  if (compact_space) {
    estimate.verdict = EndsEstimate::Verdict::Compact;
    estimate.end_count = 0;
    estimate.stabilized = true;
    return estimate;
  }

  const int window = schedule.window;
  const int rows = static_cast<int>(estimate.rows.size());
  if (rows >= window) {
    bool constant = true;
    bool increasing = true;
    for (int i = rows - window + 1; i < rows; ++i) {
      if (estimate.rows[i].escaping != estimate.rows[i - 1].escaping) constant = false;
      if (estimate.rows[i].escaping <= estimate.rows[i - 1].escaping) increasing = false;
    }
    if (constant) {
      estimate.verdict = EndsEstimate::Verdict::Finite;
      estimate.end_count = estimate.rows.back().escaping;
      estimate.stabilized = true;
    } else if (increasing) {
      estimate.verdict = EndsEstimate::Verdict::Unbounded;
    }
  }
  return estimate;
}

JSpaceVerdict is_j_space(const std::string& family,
                         const std::map<std::string, std::string>& params,
                         const EndsSchedule& schedule) {
  JSpaceVerdict verdict;
  verdict.ends = count_ends(family, params, schedule);
  switch (verdict.ends.verdict) {
    case EndsEstimate::Verdict::Compact:
      verdict.value = JSpaceVerdict::Value::No;
      verdict.rationale = "compact";
      break;
    case EndsEstimate::Verdict::Finite:
      if (verdict.ends.end_count == 1) {
        verdict.value = JSpaceVerdict::Value::Yes;
        verdict.rationale = "non-compact with one end";
      } else {
        verdict.value = JSpaceVerdict::Value::No;
        verdict.rationale = std::to_string(verdict.ends.end_count) + " ends";
      }
      break;
    case EndsEstimate::Verdict::Unbounded:
      verdict.value = JSpaceVerdict::Value::No;
      verdict.rationale = "unboundedly many ends";
      break;
    case EndsEstimate::Verdict::Inconclusive:
      verdict.value = JSpaceVerdict::Value::Inconclusive;
      verdict.rationale = "end count did not stabilize";
      break;
  }
  return verdict;
}

}  // namespace endscope

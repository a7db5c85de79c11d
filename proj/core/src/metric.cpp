#include "endscope/metric.hpp"

#include <stdexcept>

namespace endscope {

bool DistanceMatrix::has_infinite_entry() const {
  for (const auto& e : entries_)
    if (e.is_infinite()) return true;
  return false;
}

std::string MetricViolation::describe(const std::vector<std::string>& ids) const {
  auto name = [&](int v) { return v >= 0 && v < static_cast<int>(ids.size()) ? ids[v] : std::to_string(v); };
  switch (kind) {
    case Kind::ZeroDiagonal:
      return "nonzero diagonal at " + name(i);
    case Kind::Symmetry:
      return "asymmetry between " + name(i) + " and " + name(j);
    case Kind::Positivity:
      return "nonpositive distance between distinct " + name(i) + " and " + name(j);
    case Kind::Triangle:
      return "triangle inequality fails on (" + name(i) + ", " + name(j) + ", " + name(k) + ")";
  }
  return "unknown";
}

ValidationReport validate_metric(const DistanceMatrix& m) {
  ValidationReport report;
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    if (!(m.at(i, i) == ExtRational(0)))
      report.violations.push_back({MetricViolation::Kind::ZeroDiagonal, i, i, -1});
    for (int j = i + 1; j < n; ++j) {
      if (m.at(i, j) != m.at(j, i))
        report.violations.push_back({MetricViolation::Kind::Symmetry, i, j, -1});
      if (m.at(i, j) <= ExtRational(0))
        report.violations.push_back({MetricViolation::Kind::Positivity, i, j, -1});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (m.at(i, k) > m.at(i, j) + m.at(j, k))
          report.violations.push_back({MetricViolation::Kind::Triangle, i, j, k});
      }
    }
  return report;
}

DistanceMatrix shortest_path_metric(const WeightedGraph& g) {
  for (const auto& e : g.edges())
    if (e.weight <= 0) throw std::invalid_argument("nonpositive edge weight");
  const int n = g.vertex_count();
  DistanceMatrix m(n);
  for (int s = 0; s < n; ++s) {
    auto dist = g.distances_from(s);
    for (int t = s + 1; t < n; ++t) m.set(s, t, dist[t]);
  }
  return m;
}

DistanceMatrix cap_metric(const DistanceMatrix& m, const Rational& cap) {
  if (cap <= 0) throw std::invalid_argument("cap must be positive");
  const int n = m.size();
  DistanceMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.set(i, j, min_with(m.at(i, j), cap));
  return out;
}

std::vector<int> ball(const DistanceMatrix& m, int x, const Rational& r) {
  if (x < 0 || x >= m.size()) throw std::out_of_range("ball: unknown point index");
  if (r <= 0) throw std::invalid_argument("ball: radius must be positive");
  std::vector<int> inside;
  ExtRational radius{r};
  for (int j = 0; j < m.size(); ++j)
    if (m.at(x, j) < radius) inside.push_back(j);
  return inside;
}

}  // namespace endscope

#include "endscope/space.hpp"

#include <stdexcept>

namespace endscope {

int MetricSpace::index_of(const std::string& id) const {
  for (int i = 0; i < point_count(); ++i)
    if (point_ids[i] == id) return i;
  return -1;
}

bool MetricSpace::is_site(int point) const {
  if (rho_spec.kind != RhoSpec::Kind::Sites) return false;
  for (const auto& s : rho_spec.sites)
    if (s.point == point) return true;
  return false;
}

MetricSpace build_finite_space(std::vector<std::string> point_ids,
                               DistanceMatrix d, RhoSpec rho_spec) {
  const int n = d.size();
  if (static_cast<int>(point_ids.size()) != n)
    throw std::invalid_argument("point id count does not match matrix size");
  if (d.has_infinite_entry())
    throw std::invalid_argument("class-A space requires finite distances; cap first");
  auto report = validate_metric(d);
  if (!report.valid())
    throw std::invalid_argument("invalid metric: " +
                                report.violations.front().describe(point_ids));

  switch (rho_spec.kind) {
    case RhoSpec::Kind::AllInfinite:
      break;
    case RhoSpec::Kind::Sites:
      for (const auto& s : rho_spec.sites) {
        if (s.point < 0 || s.point >= n)
          throw std::invalid_argument("site refers to unknown point");
        if (s.delta <= 0) throw std::invalid_argument("site delta must be positive");
        // The generated rho has value delta at the site and d(x, s) nearby,
        // so the 1-Lipschitz law |delta - d| <= d forces delta <= 2 d(s, x)
        // for every other point x. Reject annotations that break it.
        for (int x = 0; x < n; ++x) {
          if (x == s.point) continue;
          if (ExtRational(s.delta) > d.at(s.point, x) + d.at(s.point, x))
            throw std::invalid_argument(
                "site delta at " + point_ids[s.point] + " exceeds twice the distance to " +
                point_ids[x] + "; generated rho would not be 1-Lipschitz");
        }
      }
      break;
    case RhoSpec::Kind::Explicit: {
      if (static_cast<int>(rho_spec.values.size()) != n)
        throw std::invalid_argument("explicit rho table size mismatch");
      for (const auto& v : rho_spec.values)
        if (!(v > ExtRational(0)))
          throw std::invalid_argument("rho values must be positive");
      // 1-Lipschitz, with one-sided infinity counting as a violation.
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const auto& ri = rho_spec.values[i];
          const auto& rj = rho_spec.values[j];
          if (ri.is_infinite() && rj.is_infinite()) continue;
          bool bad;
          if (ri.is_infinite() != rj.is_infinite()) {
            bad = true;
          } else {
            Rational diff = ri.finite() - rj.finite();
            if (diff < 0) diff = -diff;
            bad = ExtRational(diff) > d.at(i, j);
          }
          if (bad)
            throw std::invalid_argument("rho not 1-Lipschitz at (" + point_ids[i] +
                                        ", " + point_ids[j] + ")");
        }
      break;
    }
  }
  return MetricSpace{std::move(point_ids), std::move(d), std::move(rho_spec)};
}

bool NetworkSpace::is_compact() const {
  for (bool inf : component_infinite)
    if (inf) return false;
  return true;
}

DistanceMatrix NetworkSpace::metric() const {
  DistanceMatrix m = shortest_path_metric(graph);
  if (cap) return cap_metric(m, *cap);
  return m;
}

std::vector<ExtRational> NetworkSpace::base_distances() const {
  return graph.distances_from(basepoint);
}

NetworkSpace build_network(WeightedGraph graph, const std::string& basepoint,
                           std::optional<Rational> cap) {
  NetworkSpace space;
  space.basepoint = graph.index_of(basepoint);
  if (space.basepoint < 0)
    throw std::invalid_argument("basepoint '" + basepoint + "' not in graph");
  if (cap && *cap <= 0) throw std::invalid_argument("cap must be positive");

  space.component_of = graph.connected_components(&space.component_count);
  if (space.component_count > 1 && !cap)
    throw std::invalid_argument("disconnected graph requires a cap");

  space.graph = std::move(graph);
  space.cap = std::move(cap);
  space.boundary_mark.assign(space.graph.vertex_count(), false);
  space.component_infinite.assign(space.component_count, false);
  space.coords.assign(space.graph.vertex_count(), VertexCoord{});
  return space;
}

}  // namespace endscope

#include "endscope/compactness.hpp"

namespace endscope {

bool RhoFunction::all_infinite() const {
  for (const auto& v : values)
    if (!v.is_infinite()) return false;
  return true;
}

RhoFunction rho_finite(const MetricSpace& space) {
  const int n = space.point_count();
  RhoFunction rho;
  switch (space.rho_spec.kind) {
    case RhoSpec::Kind::AllInfinite:
      rho.values.assign(n, ExtRational::infinity());
      break;
    case RhoSpec::Kind::Explicit:
      rho.values = space.rho_spec.values;
      break;
    case RhoSpec::Kind::Sites: {
      rho.values.assign(n, ExtRational::infinity());
      for (int x = 0; x < n; ++x) {
        for (const auto& site : space.rho_spec.sites) {
          ExtRational bound = site.point == x ? ExtRational(site.delta)
                                              : space.d.at(x, site.point);
          if (bound < rho.values[x]) rho.values[x] = bound;
        }
      }
      break;
    }
  }
  return rho;
}

RhoFunction rho_network(const NetworkSpace& space) {
  RhoFunction rho;
  const int n = space.graph.vertex_count();
  if (space.is_compact() || !space.cap)
    rho.values.assign(n, ExtRational::infinity());
  else
    rho.values.assign(n, ExtRational(*space.cap));
  return rho;
}

std::optional<LipschitzWitness> check_lipschitz(const RhoFunction& rho,
                                                const DistanceMatrix& d) {
  const int n = d.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const auto& rx = rho.at(x);
      const auto& ry = rho.at(y);
      if (rx.is_infinite() && ry.is_infinite()) continue;
      if (rx.is_infinite() != ry.is_infinite()) return LipschitzWitness{x, y};
      Rational diff = rx.finite() - ry.finite();
      if (diff < 0) diff = -diff;
      if (ExtRational(diff) > d.at(x, y)) return LipschitzWitness{x, y};
    }
  return std::nullopt;
}

bool heine_borel(const MetricSpace& space) {
  return rho_finite(space).all_infinite();
}

bool heine_borel(const NetworkSpace& space) {
  return rho_network(space).all_infinite();
}

}  // namespace endscope

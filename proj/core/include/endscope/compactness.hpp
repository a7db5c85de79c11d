#pragma once

#include <optional>
#include <vector>

#include "endscope/space.hpp"

namespace endscope {

// Per-point radius of compactness: sup of radii whose open ball has
// compact closure; +inf everywhere in the Heine-Borel regime.
struct RhoFunction {
  std::vector<ExtRational> values;

  const ExtRational& at(int point) const { return values[point]; }
  bool all_infinite() const;
};

// rho of a class-A space from its rho spec. For cluster sites,
// rho(x) = min over sites s of d(x,s), with delta_s at the site itself:
// a ball has compact closure exactly while it clips only finitely many
// points of each modeled infinite cluster. No sites means rho == +inf.
RhoFunction rho_finite(const MetricSpace& space);

// rho of a class-B space, derived from the model's compactness
// semantics (compact <=> finite subcomplex): compact space or uncapped
// locally finite family => +inf (Heine-Borel); non-compact capped
// => identically the cap (a ball of radius > cap is the whole space).
RhoFunction rho_network(const NetworkSpace& space);

struct LipschitzWitness {
  int x;
  int y;
};

// First pair with |rho(x)-rho(y)| > d(x,y), or nullopt when rho is
// 1-Lipschitz. A pair with exactly one infinite value is a violation;
// both infinite passes.
std::optional<LipschitzWitness> check_lipschitz(const RhoFunction& rho,
                                                const DistanceMatrix& d);

bool heine_borel(const MetricSpace& space);
bool heine_borel(const NetworkSpace& space);

}  // namespace endscope

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "endscope/metric.hpp"

namespace endscope {

// How the radius of compactness of a finite presentation is specified.
// Cluster sites are the sanctioned generator of nontrivial finite rho:
// a site models an infinite uniform cluster sitting at gap delta, so
// rho(x) = min over sites s of d(x,s), and delta at the site itself.
struct ClusterSite {
  int point;
  Rational delta;
};

struct RhoSpec {
  enum class Kind { AllInfinite, Sites, Explicit };
  Kind kind = Kind::AllInfinite;
  std::vector<ClusterSite> sites;        // Kind::Sites
  std::vector<ExtRational> values;       // Kind::Explicit, per point
};

// Class-A presentation: a finite point set with an exact distance matrix.
struct MetricSpace {
  std::vector<std::string> point_ids;
  DistanceMatrix d;
  RhoSpec rho_spec;

  int point_count() const { return static_cast<int>(point_ids.size()); }
  int index_of(const std::string& id) const;
  bool is_site(int point) const;
};

// Builds and validates a class-A space. Rejects invalid metrics, infinite
// distance entries, and explicit rho tables that are nonpositive or not
// 1-Lipschitz (witness pair in the exception message).
MetricSpace build_finite_space(std::vector<std::string> point_ids,
                               DistanceMatrix d, RhoSpec rho_spec);

// Per-vertex coordinate in a catalog family; lets symbolic isometries
// evaluate exactly at any level.
struct VertexCoord {
  enum class Kind { None, Line, Grid, Cycle };
  Kind kind = Kind::None;
  long long a = 0;  // Line: position; Grid: x; Cycle: index
  long long b = 0;  // Grid: y
};

// Class-B presentation: a finite truncation window onto a (possibly
// infinite) locally compact 1-complex. Boundary marks flag the vertices
// whose neighborhoods may still grow at deeper levels; stabilization
// logic only trusts values computed away from them.
struct NetworkSpace {
  std::string family;                       // empty for user-supplied graphs
  std::map<std::string, std::string> params;
  int level = 1;
  WeightedGraph graph;
  int basepoint = 0;
  std::optional<Rational> cap;
  std::vector<bool> boundary_mark;          // per vertex
  std::vector<int> component_of;            // per vertex
  int component_count = 0;
  std::vector<bool> component_infinite;     // per component: grows with level
  std::vector<VertexCoord> coords;          // per vertex; Kind::None for user input

  bool is_compact() const;
  // Shortest-path metric of the level graph, capped when a cap is set.
  DistanceMatrix metric() const;
  // Uncapped distances from the basepoint (the topology does not see caps).
  std::vector<ExtRational> base_distances() const;
};

// Wraps a user-supplied finite graph as a single-level NetworkSpace.
// A disconnected graph without a cap is rejected: rho analysis needs
// finite distances everywhere.
NetworkSpace build_network(WeightedGraph graph, const std::string& basepoint,
                           std::optional<Rational> cap);

}  // namespace endscope

#pragma once

#include <vector>

#include "endscope/compactness.hpp"
#include "endscope/space.hpp"

namespace endscope {

// Directed proximity relation: arc x -> y iff d(x,y) < rho(x), exact
// strict inequality. Self-arcs are never stored; the equivalence below
// includes x = y by definition.
struct ProximityDigraph {
  int node_count = 0;
  std::vector<std::vector<int>> arcs;  // out-neighbors, ascending

  bool has_arc(int x, int y) const;
};

ProximityDigraph proximity_digraph(const DistanceMatrix& d, const RhoFunction& rho);

// Reachability by chains of arcs (one or more steps).
ProximityDigraph transitive_closure(const ProximityDigraph& g);

// Partition into pseudo-components: classes of mutual reachability, with
// singletons for unrelated nodes. Classes are listed in order of their
// smallest node and each class is sorted.
struct ComponentPartition {
  std::vector<std::vector<int>> classes;
  std::vector<bool> non_compact;  // per class
  std::vector<int> class_of;      // node -> class index
};

// Strongly connected components of the proximity digraph (Tarjan),
// without tags. The closure-based definition gives the same classes;
// tests hold the two against each other.
ComponentPartition scc_partition(const ProximityDigraph& g);

// Class-A partition over points. A class is non-compact iff it contains
// a cluster site (the site's modeled infinite cluster is bounded but not
// compact).
ComponentPartition pseudo_components(const MetricSpace& space, const RhoFunction& rho);

// Class-B partition over graph components. Pseudo-components are
// closed-open and each component of a 1-complex is connected, so a whole
// graph component lies in one pseudo-component; merging across components
// is decided by the arc test on capped cross-distances (which equal the
// cap exactly). Nodes in the result are graph-component ids.
ComponentPartition pseudo_components(const NetworkSpace& space, const RhoFunction& rho);

// Expands a class of a class-B partition to its vertex set.
std::vector<int> class_vertices(const NetworkSpace& space,
                                const ComponentPartition& partition, int cls);

}  // namespace endscope

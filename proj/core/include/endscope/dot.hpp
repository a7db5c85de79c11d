#pragma once

#include <string>

#include "endscope/compactness.hpp"
#include "endscope/components.hpp"

namespace endscope {

// Graphviz export of the proximity digraph. Nodes are grouped into one
// cluster per pseudo-component and labeled with their rho value; arcs are
// labeled with d(x,y), so each strict inequality d(x,y) < rho(x) can be
// audited visually.
std::string dot_export(const DistanceMatrix& d, const RhoFunction& rho,
                       const ProximityDigraph& digraph,
                       const ComponentPartition& partition,
                       const std::vector<std::string>& node_names);

}  // namespace endscope

#pragma once

#include <map>
#include <string>
#include <vector>

#include "endscope/space.hpp"

namespace endscope {

// Named generator families. Levels are nested: the level-n graph is an
// induced subgraph of level n+1 (vertex lists are prefixes), and the same
// (family, params, level) always yields a byte-identical space.
//
//   ray                       one-ended half line, unit weights
//   line                      two-ended line, unit weights
//   grid          [w]         planar lattice window, weight w (default 1)
//   ladder        []          two rails with rungs, unit weights
//   tree          k           rooted tree, root degree k, others k-1 children
//   cycle         m [w]       m-cycle, level-independent, compact
//   disjoint_cap  pieces, c   disjoint union of sub-families under cap c
//   paper_example m, w        grid(w) with an m-cycle(w) alongside, cap 1;
//                             requires w < 1 so the two pieces sit at
//                             capped distance exactly 1
NetworkSpace catalog_family(const std::string& name,
                            const std::map<std::string, std::string>& params,
                            int level);

struct CatalogInfo {
  std::string name;
  std::string params;
  std::string summary;
};
std::vector<CatalogInfo> catalog_list();

}  // namespace endscope

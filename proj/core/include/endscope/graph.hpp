#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "endscope/rational.hpp"

namespace endscope {

// Finite weighted graph, read as a 1-complex: an edge of weight w is a
// segment of length w. No self-loops, weights strictly positive.
class WeightedGraph {
 public:
  struct Edge {
    int u;
    int v;
    Rational weight;
  };

  int add_vertex(std::string id);
  void add_edge(int u, int v, Rational weight);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  const std::string& id_of(int v) const { return ids_[v]; }
  // -1 when the id is unknown.
  int index_of(const std::string& id) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, Rational>>& neighbors(int v) const {
    return adjacency_[v];
  }

  // Single-source shortest paths, exact arithmetic; +inf for unreachable.
  std::vector<ExtRational> distances_from(int source) const;

  // Connected component id per vertex, ids 0..k-1 in order of first vertex.
  std::vector<int> connected_components(int* count = nullptr) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, Rational>>> adjacency_;
};

}  // namespace endscope

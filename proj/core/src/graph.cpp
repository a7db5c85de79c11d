#include "endscope/graph.hpp"

#include <queue>
#include <stdexcept>

namespace endscope {

int WeightedGraph::add_vertex(std::string id) {
  auto [it, inserted] = index_.emplace(id, static_cast<int>(ids_.size()));
  if (!inserted) throw std::invalid_argument("duplicate vertex id: " + id);
  ids_.push_back(std::move(id));
  adjacency_.emplace_back();
  return it->second;
}

void WeightedGraph::add_edge(int u, int v, Rational weight) {
  if (u == v) throw std::invalid_argument("self-loop at " + ids_[u]);
  if (weight <= 0) throw std::invalid_argument("nonpositive edge weight");
  adjacency_[u].emplace_back(v, weight);
  adjacency_[v].emplace_back(u, weight);
  edges_.push_back({u, v, std::move(weight)});
}

int WeightedGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

std::vector<ExtRational> WeightedGraph::distances_from(int source) const {
  const int n = vertex_count();
  std::vector<ExtRational> dist(n, ExtRational::infinity());
  std::vector<bool> done(n, false);
  dist[source] = ExtRational(Rational(0));

  using Entry = std::pair<Rational, int>;
  auto cmp = [](const Entry& a, const Entry& b) { return a.first > b.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  heap.emplace(Rational(0), source);

  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = true;
    for (const auto& [w, len] : adjacency_[v]) {
      Rational cand = d + len;
      if (dist[w].is_infinite() || cand < dist[w].finite()) {
        dist[w] = ExtRational(cand);
        heap.emplace(std::move(cand), w);
      }
    }
  }
  return dist;
}

std::vector<int> WeightedGraph::connected_components(int* count) const {
  const int n = vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [w, len] : adjacency_[v]) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

}  // namespace endscope

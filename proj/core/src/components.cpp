#include "endscope/components.hpp"

#include <algorithm>

namespace endscope {

bool ProximityDigraph::has_arc(int x, int y) const {
  const auto& out = arcs[x];
  return std::binary_search(out.begin(), out.end(), y);
}

ProximityDigraph proximity_digraph(const DistanceMatrix& d, const RhoFunction& rho) {
  const int n = d.size();
  ProximityDigraph g;
  g.node_count = n;
  g.arcs.resize(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      if (d.at(x, y) < rho.at(x)) g.arcs[x].push_back(y);
    }
  return g;
}

ProximityDigraph transitive_closure(const ProximityDigraph& g) {
  const int n = g.node_count;
  ProximityDigraph out;
  out.node_count = n;
  out.arcs.resize(n);
  std::vector<bool> seen(n);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), false);
    for (int w : g.arcs[s]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.arcs[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    for (int v = 0; v < n; ++v)
      if (seen[v] && v != s) out.arcs[s].push_back(v);
  }
  return out;
}

namespace {

// Iterative Tarjan.
struct TarjanState {
  const ProximityDigraph& g;
  std::vector<int> index, lowlink, scc_of;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0;
  int scc_count = 0;

  explicit TarjanState(const ProximityDigraph& graph)
      : g(graph),
        index(graph.node_count, -1),
        lowlink(graph.node_count, 0),
        scc_of(graph.node_count, -1),
        on_stack(graph.node_count, false) {}

  void run(int root) {
    struct Frame {
      int v;
      std::size_t edge;
    };
    std::vector<Frame> frames{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < g.arcs[f.v].size()) {
        int w = g.arcs[f.v][f.edge++];
        if (index[w] < 0) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        if (lowlink[f.v] == index[f.v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            scc_of[w] = scc_count;
          } while (w != f.v);
          ++scc_count;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
      }
    }
  }
};

}  // namespace

ComponentPartition scc_partition(const ProximityDigraph& g) {
  TarjanState state(g);
  for (int v = 0; v < g.node_count; ++v)
    if (state.index[v] < 0) state.run(v);

  // Renumber classes by smallest member for a deterministic order.
  std::vector<std::vector<int>> raw(state.scc_count);
  for (int v = 0; v < g.node_count; ++v) raw[state.scc_of[v]].push_back(v);
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  ComponentPartition part;
  part.classes = std::move(raw);
  part.class_of.assign(g.node_count, -1);
  for (int c = 0; c < static_cast<int>(part.classes.size()); ++c)
    for (int v : part.classes[c]) part.class_of[v] = c;
  part.non_compact.assign(part.classes.size(), false);
  return part;
}

ComponentPartition pseudo_components(const MetricSpace& space, const RhoFunction& rho) {
  ComponentPartition part = scc_partition(proximity_digraph(space.d, rho));
  for (int c = 0; c < static_cast<int>(part.classes.size()); ++c)
    for (int p : part.classes[c])
      if (space.is_site(p)) part.non_compact[c] = true;
  return part;
}

ComponentPartition pseudo_components(const NetworkSpace& space, const RhoFunction& rho) {
  // Quotient digraph over graph components. Cross-component distance is
  // +inf uncapped and exactly the cap under a cap; within this model rho
  // is constant, so the arc test needs no per-vertex metric.
  const int k = space.component_count;
  ExtRational cross = space.cap ? ExtRational(*space.cap) : ExtRational::infinity();
  ExtRational rho0 = rho.values.empty() ? ExtRational::infinity() : rho.values.front();
  ProximityDigraph g;
  g.node_count = k;
  g.arcs.resize(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && cross < rho0) g.arcs[a].push_back(b);

  ComponentPartition part = scc_partition(g);
  for (int c = 0; c < static_cast<int>(part.classes.size()); ++c)
    for (int comp : part.classes[c])
      if (space.component_infinite[comp]) part.non_compact[c] = true;
  return part;
}

std::vector<int> class_vertices(const NetworkSpace& space,
                                const ComponentPartition& partition, int cls) {
  std::vector<int> out;
  for (int v = 0; v < space.graph.vertex_count(); ++v)
    if (partition.class_of[space.component_of[v]] == cls) out.push_back(v);
  return out;
}

}  // namespace endscope

#pragma once

// Shared brute-force oracles and randomized space generators. Everything
// here is deliberately independent of the library's computation paths:
// plain BFS, literal-definition closures, full permutation scans.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "endscope/compactness.hpp"
#include "endscope/components.hpp"
#include "endscope/isometry.hpp"
#include "endscope/space.hpp"

namespace endscope::testing {

// Unweighted BFS hop count, for unit-weight graphs.
inline std::vector<int> bfs_hops(const WeightedGraph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (const auto& [w, len] : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

// Literal-definition pseudo-components: R from the strict inequality,
// R* by iterated squaring of the reachability matrix, E by the x=y-or-
// mutual-reachability clause, classes by scanning.
inline std::vector<std::vector<int>> brute_force_classes(const DistanceMatrix& d,
                                                         const RhoFunction& rho) {
  const int n = d.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && d.at(x, y) < rho.at(x)) reach[x][y] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (reach[x][y])
          for (int z = 0; z < n; ++z)
            if (reach[y][z] && !reach[x][z]) {
              reach[x][z] = true;
              changed = true;
            }
  }
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    int id = static_cast<int>(classes.size());
    classes.push_back({x});
    cls[x] = id;
    for (int y = x + 1; y < n; ++y)
      if (cls[y] < 0 && reach[x][y] && reach[y][x]) {
        cls[y] = id;
        classes.back().push_back(y);
      }
  }
  return classes;
}

// All distance- and rho-preserving permutations by full n! scan.
inline std::vector<Permutation> brute_force_isometries(const MetricSpace& space,
                                                       const RhoFunction& rho) {
  const int n = space.point_count();
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(rho.at(i) == rho.at(perm[i]))) ok = false;
      for (int j = i + 1; j < n && ok; ++j)
        if (space.d.at(i, j) != space.d.at(perm[i], perm[j])) ok = false;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Random valid class-A space: shortest-path metric of a random connected
// weighted graph, with optional random cluster sites.
inline MetricSpace random_site_space(std::mt19937& rng, int max_points,
                                     int max_sites = 3) {
  std::uniform_int_distribution<int> size_dist(1, max_points);
  const int n = size_dist(rng);

  WeightedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("p" + std::to_string(i));
  std::uniform_int_distribution<int> num(1, 6);
  std::uniform_int_distribution<int> den(1, 4);
  auto weight = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    g.add_edge(parent(rng), i, weight());
  }
  std::uniform_int_distribution<int> extra(0, n);
  for (int e = extra(rng); e > 0 && n >= 2; --e) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int u = pick(rng), v = pick(rng);
    if (u != v) g.add_edge(u, v, weight());
  }

  DistanceMatrix d = shortest_path_metric(g);

  RhoSpec spec;
  std::uniform_int_distribution<int> site_count(0, max_sites);
  int sites = std::min(site_count(rng), n);
  if (sites > 0) {
    spec.kind = RhoSpec::Kind::Sites;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int s = 0; s < sites; ++s) {
      // Admissible gap: at most twice the distance to the nearest other
      // point, so the generated rho stays 1-Lipschitz.
      Rational delta = weight();
      for (int x = 0; x < n; ++x) {
        if (x == order[s]) continue;
        Rational bound = d.at(order[s], x).finite() * 2;
        if (delta > bound) delta = bound;
      }
      spec.sites.push_back({order[s], delta});
    }
  }

  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(g.id_of(i));
  return build_finite_space(std::move(ids), std::move(d), std::move(spec));
}

inline bool same_partition(std::vector<std::vector<int>> a,
                           std::vector<std::vector<int>> b) {
  for (auto& cls : a) std::sort(cls.begin(), cls.end());
  for (auto& cls : b) std::sort(cls.begin(), cls.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace endscope::testing

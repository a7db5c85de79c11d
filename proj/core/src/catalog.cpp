#include "endscope/catalog.hpp"

#include <stdexcept>

namespace endscope {

namespace {

struct Piece {
  WeightedGraph graph;
  int basepoint = 0;
  std::vector<bool> boundary_mark;
  std::vector<VertexCoord> coords;
  bool infinite = false;
};

std::string grid_id(long long x, long long y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

Piece make_ray(int level, const Rational& w) {
  Piece p;
  for (long long t = 0; t <= level; ++t) {
    int v = p.graph.add_vertex("v" + std::to_string(t));
    p.coords.push_back({VertexCoord::Kind::Line, t, 0});
    if (t > 0) p.graph.add_edge(v - 1, v, w);
  }
  p.boundary_mark.assign(p.graph.vertex_count(), false);
  p.boundary_mark.back() = true;
  p.infinite = true;
  return p;
}

Piece make_line(int level, const Rational& w) {
  Piece p;
  auto add = [&](long long t) {
    int v = p.graph.add_vertex("v" + std::to_string(t));
    p.coords.push_back({VertexCoord::Kind::Line, t, 0});
    for (long long nb : {t - 1, t + 1}) {
      int u = p.graph.index_of("v" + std::to_string(nb));
      if (u >= 0) p.graph.add_edge(u, v, w);
    }
  };
  add(0);
  for (long long t = 1; t <= level; ++t) {
    add(t);
    add(-t);
  }
  p.boundary_mark.assign(p.graph.vertex_count(), false);
  for (int v = 0; v < p.graph.vertex_count(); ++v)
    if (p.coords[v].a == level || p.coords[v].a == -level) p.boundary_mark[v] = true;
  p.infinite = true;
  return p;
}

Piece make_grid(int level, const Rational& w) {
  Piece p;
  auto add = [&](long long x, long long y) {
    int v = p.graph.add_vertex(grid_id(x, y));
    p.coords.push_back({VertexCoord::Kind::Grid, x, y});
    const long long dx[4] = {-1, 1, 0, 0};
    const long long dy[4] = {0, 0, -1, 1};
    for (int k = 0; k < 4; ++k) {
      int u = p.graph.index_of(grid_id(x + dx[k], y + dy[k]));
      if (u >= 0) p.graph.add_edge(u, v, w);
    }
  };
  add(0, 0);
  for (long long r = 1; r <= level; ++r)
    for (long long x = -r; x <= r; ++x)
      for (long long y = -r; y <= r; ++y)
        if (std::max(std::abs(x), std::abs(y)) == r) add(x, y);
  p.boundary_mark.assign(p.graph.vertex_count(), false);
  for (int v = 0; v < p.graph.vertex_count(); ++v)
    if (std::max(std::abs(p.coords[v].a), std::abs(p.coords[v].b)) == level)
      p.boundary_mark[v] = true;
  p.infinite = true;
  return p;
}

Piece make_ladder(int level, const Rational& w) {
  Piece p;
  auto add = [&](long long t) {
    for (long long rail = 0; rail <= 1; ++rail) {
      std::string id = "v" + std::to_string(t) + (rail ? "b" : "a");
      int v = p.graph.add_vertex(id);
      p.coords.push_back({VertexCoord::Kind::None, t, rail});
      if (rail == 1) p.graph.add_edge(v - 1, v, w);  // rung
      for (long long nb : {t - 1, t + 1}) {
        int u = p.graph.index_of("v" + std::to_string(nb) + (rail ? "b" : "a"));
        if (u >= 0) p.graph.add_edge(u, v, w);  // rail
      }
    }
  };
  add(0);
  for (long long t = 1; t <= level; ++t) {
    add(t);
    add(-t);
  }
  p.boundary_mark.assign(p.graph.vertex_count(), false);
  for (int v = 0; v < p.graph.vertex_count(); ++v)
    if (p.coords[v].a == level || p.coords[v].a == -level) p.boundary_mark[v] = true;
  p.infinite = true;
  return p;
}

Piece make_tree(int level, int k, const Rational& w) {
  if (k < 2) throw std::invalid_argument("tree: k must be >= 2");
  Piece p;
  struct Node {
    int index;
    std::string id;
    int children;
  };
  std::vector<Node> frontier;
  int root = p.graph.add_vertex("r");
  p.coords.push_back({VertexCoord::Kind::None, 0, 0});
  frontier.push_back({root, "r", k});
  for (int depth = 1; depth <= level; ++depth) {
    std::vector<Node> next;
    for (const auto& node : frontier)
      for (int c = 0; c < node.children; ++c) {
        std::string id = node.id + "." + std::to_string(c);
        int v = p.graph.add_vertex(id);
        p.coords.push_back({VertexCoord::Kind::None, depth, 0});
        p.graph.add_edge(node.index, v, w);
        next.push_back({v, id, k - 1});
      }
    frontier = std::move(next);
  }
  p.boundary_mark.assign(p.graph.vertex_count(), false);
  for (const auto& node : frontier) p.boundary_mark[node.index] = true;
  p.infinite = true;
  return p;
}

Piece make_cycle(int m, const Rational& w) {
  if (m < 3) throw std::invalid_argument("cycle: m must be >= 3");
  Piece p;
  for (int i = 0; i < m; ++i) {
    int v = p.graph.add_vertex("c" + std::to_string(i));
    p.coords.push_back({VertexCoord::Kind::Cycle, i, 0});
    if (i > 0) p.graph.add_edge(v - 1, v, w);
  }
  p.graph.add_edge(m - 1, 0, w);
  p.boundary_mark.assign(m, false);
  p.infinite = false;
  return p;
}

NetworkSpace assemble(std::string family,
                      std::map<std::string, std::string> params, int level,
                      std::vector<Piece> pieces,
                      std::vector<std::string> prefixes,
                      std::optional<Rational> cap) {
  if (pieces.size() > 1 && !cap)
    throw std::invalid_argument("disjoint union requires a cap");
  NetworkSpace space;
  space.family = std::move(family);
  space.params = std::move(params);
  space.level = level;
  space.cap = std::move(cap);
  for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
    const Piece& p = pieces[pi];
    std::vector<int> remap(p.graph.vertex_count());
    for (int v = 0; v < p.graph.vertex_count(); ++v) {
      remap[v] = space.graph.add_vertex(prefixes[pi] + p.graph.id_of(v));
      space.boundary_mark.push_back(p.boundary_mark[v]);
      space.coords.push_back(p.coords[v]);
      space.component_of.push_back(static_cast<int>(pi));
    }
    for (const auto& e : p.graph.edges())
      space.graph.add_edge(remap[e.u], remap[e.v], e.weight);
    space.component_infinite.push_back(p.infinite);
    if (pi == 0) space.basepoint = remap[p.basepoint];
  }
  space.component_count = static_cast<int>(pieces.size());
  return space;
}

int int_param(const std::map<std::string, std::string>& params,
              const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing parameter '" + key + "'");
  return std::stoi(it->second);
}

Rational rational_param(const std::map<std::string, std::string>& params,
                        const std::string& key, const Rational& fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  return parse_rational(it->second);
}

Piece make_piece(const std::string& spec, int level);

// "name" or "name(arg)" where arg is the family's primary integer param.
Piece make_piece(const std::string& spec, int level) {
  std::string name = spec;
  int arg = -1;
  auto open = spec.find('(');
  if (open != std::string::npos) {
    if (spec.back() != ')') throw std::invalid_argument("bad piece spec: " + spec);
    name = spec.substr(0, open);
    arg = std::stoi(spec.substr(open + 1, spec.size() - open - 2));
  }
  Rational one(1);
  if (name == "ray") return make_ray(level, one);
  if (name == "line") return make_line(level, one);
  if (name == "grid") return make_grid(level, one);
  if (name == "ladder") return make_ladder(level, one);
  if (name == "tree") return make_tree(level, arg < 0 ? 3 : arg, one);
  if (name == "cycle") {
    if (arg < 0) throw std::invalid_argument("cycle piece needs (m)");
    return make_cycle(arg, one);
  }
  throw std::invalid_argument("unknown piece family: " + name);
}

}  // namespace

NetworkSpace catalog_family(const std::string& name,
                            const std::map<std::string, std::string>& params,
                            int level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  Rational one(1);
  if (name == "ray")
    return assemble(name, params, level, {make_ray(level, one)}, {""}, {});
  if (name == "line")
    return assemble(name, params, level, {make_line(level, one)}, {""}, {});
  if (name == "grid") {
    Rational w = rational_param(params, "w", one);
    if (w <= 0) throw std::invalid_argument("grid: w must be positive");
    return assemble(name, params, level, {make_grid(level, w)}, {""}, {});
  }
  if (name == "ladder")
    return assemble(name, params, level, {make_ladder(level, one)}, {""}, {});
  if (name == "tree")
    return assemble(name, params, level,
                    {make_tree(level, int_param(params, "k"), one)}, {""}, {});
  if (name == "cycle") {
    Rational w = rational_param(params, "w", one);
    return assemble(name, params, level,
                    {make_cycle(int_param(params, "m"), w)}, {""}, {});
  }
  if (name == "paper_example") {
    int m = int_param(params, "m");
    Rational w = rational_param(params, "w", Rational(1, 10));
    if (w <= 0 || w >= 1)
      throw std::invalid_argument("paper_example: need 0 < w < 1");
    std::vector<Piece> pieces;
    pieces.push_back(make_grid(level, w));
    pieces.push_back(make_cycle(m, w));
    return assemble(name, params, level, std::move(pieces), {"", ""},
                    Rational(1));
  }
  if (name == "disjoint_cap") {
    auto it = params.find("pieces");
    if (it == params.end())
      throw std::invalid_argument("disjoint_cap: missing 'pieces'");
    Rational c = rational_param(params, "c", one);
    if (c <= 0) throw std::invalid_argument("disjoint_cap: c must be positive");
    std::vector<Piece> pieces;
    std::vector<std::string> prefixes;
    std::string rest = it->second;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string spec = rest.substr(0, comma);
      rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
      prefixes.push_back("p" + std::to_string(pieces.size()) + ".");
      pieces.push_back(make_piece(spec, level));
    }
    if (pieces.empty()) throw std::invalid_argument("disjoint_cap: empty piece list");
    return assemble(name, params, level, std::move(pieces), std::move(prefixes), c);
  }
  throw std::invalid_argument("unknown catalog family: " + name);
}

std::vector<CatalogInfo> catalog_list() {
  return {
      {"ray", "", "one-ended half line, unit weights"},
      {"line", "", "two-ended line, unit weights"},
      {"grid", "w=num/den (default 1)", "planar lattice window, one end"},
      {"ladder", "", "two rails with rungs, two ends"},
      {"tree", "k=K", "rooted tree, root degree k; infinitely many ends"},
      {"cycle", "m=M w=num/den (default 1)", "compact m-cycle, level-independent"},
      {"disjoint_cap", "pieces=spec,spec,... c=num/den",
       "disjoint union of pieces under cap c; piece spec: name or name(arg)"},
      {"paper_example", "m=M w=num/den (default 1/10)",
       "grid(w) alongside an m-cycle(w), capped at 1"},
  };
}

}  // namespace endscope

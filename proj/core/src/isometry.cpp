#include "endscope/isometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace endscope {

// ---------------------------------------------------------------------------
// Class A enumeration.

int default_enumeration_bound() {
  if (const char* env = std::getenv("ENDSCOPE_MAX_N")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 16;
}

namespace {

void verify_group_axioms(const std::vector<Permutation>& group, int n) {
  std::set<Permutation> members(group.begin(), group.end());
  Permutation scratch(n);
  for (const auto& g : group) {
    // inverse
    for (int i = 0; i < n; ++i) scratch[g[i]] = i;
    if (!members.count(scratch)) throw std::logic_error("isometry set not closed under inverse");
  }
  if (group.size() * group.size() > 1'000'000) return;  // closure check too large
  for (const auto& g : group)
    for (const auto& h : group) {
      for (int i = 0; i < n; ++i) scratch[i] = g[h[i]];
      if (!members.count(scratch)) throw std::logic_error("isometry set not closed under composition");
    }
}

}  // namespace

std::vector<Permutation> isometry_group_finite(const MetricSpace& space,
                                               const RhoFunction& rho, int max_n) {
  const int n = space.point_count();
  if (n > max_n)
    throw std::invalid_argument("space exceeds the enumeration bound (" +
                                std::to_string(max_n) + " points)");

  // Per-point invariants: rho value and sorted distance multiset.
  std::vector<std::vector<ExtRational>> profile(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (j != i) profile[i].push_back(space.d.at(i, j));
    std::sort(profile[i].begin(), profile[i].end());
  }

  std::vector<Permutation> group;
  Permutation image(n, -1);
  std::vector<bool> used(n, false);

  auto backtrack = [&](auto&& self, int point) -> void {
    if (point == n) {
      group.push_back(image);
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      if (!(rho.at(point) == rho.at(cand))) continue;
      if (profile[point] != profile[cand]) continue;
      bool ok = true;
      for (int prev = 0; prev < point; ++prev)
        if (space.d.at(point, prev) != space.d.at(cand, image[prev])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[point] = cand;
      used[cand] = true;
      self(self, point + 1);
      used[cand] = false;
      image[point] = -1;
    }
  };
  backtrack(backtrack, 0);

  verify_group_axioms(group, n);
  return group;
}

std::vector<Permutation> transporter_finite(const std::vector<Permutation>& group,
                                            int x, int y) {
  std::vector<Permutation> out;
  for (const auto& g : group)
    if (g[x] == y) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Point group of the square.

PointOp operator*(const PointOp& a, const PointOp& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

PointOp PointOp::inverse() const { return {m00, m10, m01, m11}; }

const std::vector<PointOp>& square_point_group() {
  static const std::vector<PointOp> ops = [] {
    std::vector<PointOp> out;
    PointOp rot{0, -1, 1, 0};
    PointOp flip{1, 0, 0, -1};
    PointOp r{};
    for (int i = 0; i < 4; ++i) {
      out.push_back(r);
      out.push_back(r * flip);
      r = r * rot;
    }
    return out;
  }();
  return ops;
}

// ---------------------------------------------------------------------------
// Factor algebra.

namespace {

long long mod(long long v, long long m) { return ((v % m) + m) % m; }

}  // namespace

long long SymbolicFactor::finite_order() const {
  switch (kind) {
    case Kind::Trivial: return 1;
    case Kind::Cycle: return 2 * modulus;
    default: throw std::logic_error("finite_order() on an infinite factor");
  }
}

FactorElem SymbolicFactor::identity() const {
  switch (kind) {
    case Kind::Trivial: return TrivialElem{};
    case Kind::Grid: return GridElem{};
    case Kind::Cycle: return CycleElem{};
    case Kind::Line: return LineElem{};
  }
  return TrivialElem{};
}

FactorElem SymbolicFactor::compose(const FactorElem& a, const FactorElem& b) const {
  switch (kind) {
    case Kind::Trivial:
      return TrivialElem{};
    case Kind::Grid: {
      const auto& ga = std::get<GridElem>(a);
      const auto& gb = std::get<GridElem>(b);
      GridElem out;
      out.tx = ga.tx + ga.op.m00 * gb.tx + ga.op.m01 * gb.ty;
      out.ty = ga.ty + ga.op.m10 * gb.tx + ga.op.m11 * gb.ty;
      out.op = ga.op * gb.op;
      return out;
    }
    case Kind::Cycle: {
      const auto& ca = std::get<CycleElem>(a);
      const auto& cb = std::get<CycleElem>(b);
      long long shift = ca.shift + (ca.reflect ? -cb.shift : cb.shift);
      return CycleElem{mod(shift, modulus), ca.reflect != cb.reflect};
    }
    case Kind::Line: {
      const auto& la = std::get<LineElem>(a);
      const auto& lb = std::get<LineElem>(b);
      return LineElem{la.shift + (la.reflect ? -lb.shift : lb.shift),
                      la.reflect != lb.reflect};
    }
  }
  return TrivialElem{};
}

FactorElem SymbolicFactor::invert(const FactorElem& a) const {
  switch (kind) {
    case Kind::Trivial:
      return TrivialElem{};
    case Kind::Grid: {
      const auto& g = std::get<GridElem>(a);
      PointOp inv = g.op.inverse();
      return GridElem{-(inv.m00 * g.tx + inv.m01 * g.ty),
                      -(inv.m10 * g.tx + inv.m11 * g.ty), inv};
    }
    case Kind::Cycle: {
      const auto& c = std::get<CycleElem>(a);
      if (c.reflect) return c;  // involution
      return CycleElem{mod(-c.shift, modulus), false};
    }
    case Kind::Line: {
      const auto& l = std::get<LineElem>(a);
      if (l.reflect) return l;
      return LineElem{-l.shift, false};
    }
  }
  return TrivialElem{};
}

std::vector<FactorElem> SymbolicFactor::enumerate() const {
  switch (kind) {
    case Kind::Trivial:
      return {TrivialElem{}};
    case Kind::Cycle: {
      std::vector<FactorElem> out;
      for (long long s = 0; s < modulus; ++s)
        for (bool refl : {false, true}) out.push_back(CycleElem{s, refl});
      return out;
    }
    default:
      throw std::logic_error("enumerate() on an infinite factor");
  }
}

// ---------------------------------------------------------------------------
// SymbolicIsometryGroup.

const SymbolicFactor& SymbolicIsometryGroup::factor_of_component(int component) const {
  for (const auto& f : factors_)
    if (f.component == component) return f;
  throw std::logic_error("component has no symbolic factor");
}

bool SymbolicIsometryGroup::infinite() const {
  for (const auto& f : factors_)
    if (f.infinite()) return true;
  return false;
}

SymbolicElem SymbolicIsometryGroup::identity() const {
  SymbolicElem e;
  for (const auto& f : factors_) e.parts.push_back(f.identity());
  return e;
}

SymbolicElem SymbolicIsometryGroup::compose(const SymbolicElem& a,
                                            const SymbolicElem& b) const {
  SymbolicElem out;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out.parts.push_back(factors_[i].compose(a.parts[i], b.parts[i]));
  return out;
}

SymbolicElem SymbolicIsometryGroup::invert(const SymbolicElem& a) const {
  SymbolicElem out;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out.parts.push_back(factors_[i].invert(a.parts[i]));
  return out;
}

VertexCoord SymbolicIsometryGroup::apply_coord(const SymbolicElem& g,
                                               const NetworkSpace& space,
                                               int vertex) const {
  int component = space.component_of[vertex];
  VertexCoord coord = space.coords[vertex];
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const SymbolicFactor& f = factors_[i];
    if (f.component != component) continue;
    switch (f.kind) {
      case SymbolicFactor::Kind::Trivial:
        break;
      case SymbolicFactor::Kind::Grid: {
        const auto& e = std::get<GridElem>(g.parts[i]);
        long long x = coord.a, y = coord.b;
        coord.a = e.tx + e.op.m00 * x + e.op.m01 * y;
        coord.b = e.ty + e.op.m10 * x + e.op.m11 * y;
        break;
      }
      case SymbolicFactor::Kind::Cycle: {
        const auto& e = std::get<CycleElem>(g.parts[i]);
        coord.a = mod(e.shift + (e.reflect ? -coord.a : coord.a), f.modulus);
        break;
      }
      case SymbolicFactor::Kind::Line: {
        const auto& e = std::get<LineElem>(g.parts[i]);
        coord.a = e.shift + (e.reflect ? -coord.a : coord.a);
        break;
      }
    }
    break;
  }
  return coord;
}

int SymbolicIsometryGroup::apply_vertex(const SymbolicElem& g,
                                        const NetworkSpace& space,
                                        int vertex) const {
  int component = space.component_of[vertex];
  const SymbolicFactor& f = factor_of_component(component);
  VertexCoord coord = apply_coord(g, space, vertex);
  std::string id;
  switch (f.kind) {
    case SymbolicFactor::Kind::Trivial:
      return vertex;
    case SymbolicFactor::Kind::Grid:
      id = "(" + std::to_string(coord.a) + "," + std::to_string(coord.b) + ")";
      break;
    case SymbolicFactor::Kind::Cycle:
      id = "c" + std::to_string(coord.a);
      break;
    case SymbolicFactor::Kind::Line:
      id = "v" + std::to_string(coord.a);
      break;
  }
  return space.graph.index_of(f.id_prefix + id);
}

std::string SymbolicIsometryGroup::describe() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " x ";
    switch (f.kind) {
      case SymbolicFactor::Kind::Trivial: out += "trivial"; break;
      case SymbolicFactor::Kind::Grid: out += "lattice translations with square point group"; break;
      case SymbolicFactor::Kind::Cycle: out += "dihedral(" + std::to_string(f.modulus) + ")"; break;
      case SymbolicFactor::Kind::Line: out += "line shifts and flips"; break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Registration.

namespace {

SymbolicFactor piece_factor(const std::string& spec, int component,
                            const std::string& prefix) {
  std::string name = spec;
  long long arg = 0;
  auto open = spec.find('(');
  if (open != std::string::npos) {
    name = spec.substr(0, open);
    arg = std::stoll(spec.substr(open + 1, spec.size() - open - 2));
  }
  SymbolicFactor f;
  f.component = component;
  f.id_prefix = prefix;
  if (name == "ray") {
    f.kind = SymbolicFactor::Kind::Trivial;
  } else if (name == "line") {
    f.kind = SymbolicFactor::Kind::Line;
  } else if (name == "grid") {
    f.kind = SymbolicFactor::Kind::Grid;
  } else if (name == "cycle") {
    f.kind = SymbolicFactor::Kind::Cycle;
    f.modulus = arg;
  } else {
    throw std::invalid_argument("no registered symmetry model for piece '" + name + "'");
  }
  return f;
}

}  // namespace

SymbolicIsometryGroup symbolic_group(const NetworkSpace& space) {
  const std::string& family = space.family;
  auto param = [&](const std::string& key) -> std::string {
    auto it = space.params.find(key);
    if (it == space.params.end())
      throw std::invalid_argument("missing parameter '" + key + "'");
    return it->second;
  };

  std::vector<SymbolicFactor> factors;
  if (family == "ray") {
    factors.push_back({SymbolicFactor::Kind::Trivial, 0, 0, ""});
  } else if (family == "line") {
    factors.push_back({SymbolicFactor::Kind::Line, 0, 0, ""});
  } else if (family == "grid") {
    factors.push_back({SymbolicFactor::Kind::Grid, 0, 0, ""});
  } else if (family == "cycle") {
    factors.push_back({SymbolicFactor::Kind::Cycle, 0, std::stoll(param("m")), ""});
  } else if (family == "paper_example") {
    factors.push_back({SymbolicFactor::Kind::Grid, 0, 0, ""});
    factors.push_back({SymbolicFactor::Kind::Cycle, 1, std::stoll(param("m")), ""});
  } else if (family == "disjoint_cap") {
    std::string rest = param("pieces");
    std::vector<std::string> specs;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      specs.push_back(rest.substr(0, comma));
      rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    }
    for (std::size_t i = 0; i < specs.size(); ++i)
      for (std::size_t j = i + 1; j < specs.size(); ++j)
        if (specs[i] == specs[j])
          throw std::invalid_argument(
              "identical pieces: cross-piece swap isometries are not modeled");
    for (std::size_t i = 0; i < specs.size(); ++i)
      factors.push_back(piece_factor(specs[i], static_cast<int>(i),
                                     "p" + std::to_string(i) + "."));
  } else {
    throw std::invalid_argument("no registered symmetry model for '" +
                                (family.empty() ? std::string("user graph") : family) + "'");
  }
  return SymbolicIsometryGroup(std::move(factors));
}

// ---------------------------------------------------------------------------
// Transporters.

namespace {

std::vector<FactorElem> factor_transporter(const SymbolicFactor& f,
                                           const VertexCoord& from,
                                           const VertexCoord& to,
                                           bool same_vertex) {
  std::vector<FactorElem> out;
  switch (f.kind) {
    case SymbolicFactor::Kind::Trivial:
      if (same_vertex) out.push_back(TrivialElem{});
      break;
    case SymbolicFactor::Kind::Grid:
      for (const PointOp& op : square_point_group()) {
        GridElem e;
        e.op = op;
        e.tx = to.a - (op.m00 * from.a + op.m01 * from.b);
        e.ty = to.b - (op.m10 * from.a + op.m11 * from.b);
        out.push_back(e);
      }
      break;
    case SymbolicFactor::Kind::Cycle:
      out.push_back(CycleElem{mod(to.a - from.a, f.modulus), false});
      out.push_back(CycleElem{mod(to.a + from.a, f.modulus), true});
      break;
    case SymbolicFactor::Kind::Line:
      out.push_back(LineElem{to.a - from.a, false});
      out.push_back(LineElem{to.a + from.a, true});
      break;
  }
  return out;
}

}  // namespace

TransporterQuery transporter(const SymbolicIsometryGroup& group,
                             const NetworkSpace& space, int x, int y) {
  TransporterQuery q;
  if (space.component_of[x] != space.component_of[y]) {
    q.finite = true;
    q.count = 0;
    q.description = "empty: isometries preserve graph components";
    return q;
  }
  const int component = space.component_of[x];
  const auto& factors = group.factors();

  std::vector<std::vector<FactorElem>> choices(factors.size());
  q.finite = true;
  long long count = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const SymbolicFactor& f = factors[i];
    if (f.component == component) {
      choices[i] = factor_transporter(f, space.coords[x], space.coords[y], x == y);
      count *= static_cast<long long>(choices[i].size());
    } else if (f.infinite()) {
      q.finite = false;
      q.description = "infinite: an unconstrained infinite factor remains free";
    } else {
      choices[i] = f.enumerate();
      count *= f.finite_order();
    }
  }
  if (!q.finite) return q;
  q.count = count;
  if (count > 0 && count <= 512) {
    // Cartesian product of the per-factor choices.
    std::vector<std::size_t> idx(factors.size(), 0);
    while (true) {
      SymbolicElem e;
      for (std::size_t i = 0; i < factors.size(); ++i) e.parts.push_back(choices[i][idx[i]]);
      q.elements.push_back(std::move(e));
      std::size_t i = 0;
      for (; i < factors.size(); ++i) {
        if (++idx[i] < choices[i].size()) break;
        idx[i] = 0;
      }
      if (i == factors.size()) break;
    }
  }
  q.description = q.count == 0 ? "empty" : "finite, " + std::to_string(q.count) + " elements";
  return q;
}

// ---------------------------------------------------------------------------
// Orbits, K(F), limit sets, properness.

namespace {

// Whether the given part of a subset has finite orbits on its component.
bool part_acts_finitely(const SymbolicFactor& f, const SymbolicSubset::Part& part) {
  switch (part.kind) {
    case SymbolicSubset::PartKind::Explicit:
      return true;
    case SymbolicSubset::PartKind::FullFactor:
      return !f.infinite();
    case SymbolicSubset::PartKind::TranslationsOnly:
      return !f.infinite();  // translations of a finite factor are its rotations
  }
  return true;
}

int first_vertex_of_component(const NetworkSpace& space, int component) {
  for (int v = 0; v < space.graph.vertex_count(); ++v)
    if (space.component_of[v] == component) return v;
  return -1;
}

}  // namespace

PrecompactnessResult is_precompact(const SymbolicIsometryGroup& group,
                                   const SymbolicSubset& subset,
                                   const NetworkSpace& space) {
  const auto& factors = group.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (part_acts_finitely(factors[i], subset.parts[i])) continue;
    int witness = first_vertex_of_component(space, factors[i].component);
    if (witness >= 0) return {false, witness};
  }
  return {true, -1};
}

KofFResult k_of_f(const SymbolicIsometryGroup& group, const SymbolicSubset& subset,
                  const NetworkSpace& space, const ComponentPartition& partition) {
  const auto& factors = group.factors();
  std::vector<bool> component_in(space.component_count, false);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (part_acts_finitely(factors[i], subset.parts[i]))
      component_in[factors[i].component] = true;

  KofFResult result;
  for (int v = 0; v < space.graph.vertex_count(); ++v)
    if (component_in[space.component_of[v]]) result.vertices.push_back(v);

  // Clopen certificate: every pseudo-component class is entirely in or out.
  result.clopen_certified = true;
  for (int cls = 0; cls < static_cast<int>(partition.classes.size()); ++cls) {
    bool any_in = false, any_out = false;
    for (int comp : partition.classes[cls])
      (component_in[comp] ? any_in : any_out) = true;
    if (any_in && any_out) result.clopen_certified = false;
    if (any_in && !any_out) result.classes.push_back(cls);
  }
  return result;
}

LimitSetResult limit_set_witness(const SymbolicIsometryGroup& group,
                                 const NetworkSpace& space, int x) {
  const auto& factors = group.factors();
  const int home = space.component_of[x];
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!factors[i].infinite() || factors[i].component == home) continue;
    LimitWitness w;
    w.infinite_factor = static_cast<int>(i);
    w.fixed_vertex = x;
    w.divergence_vertex = first_vertex_of_component(space, factors[i].component);
    w.description =
        "g_k = k-th power of a translation generator in the factor on component " +
        std::to_string(factors[i].component) + "; every g_k fixes " +
        space.graph.id_of(x) + " while g_k-images of " +
        space.graph.id_of(w.divergence_vertex) + " are pairwise distinct";
    return {false, w};
  }
  // Every transporter from x is finite and orbits are discrete: no net can
  // leave every compact subset of G while keeping g_i(x) convergent.
  return {true, std::nullopt};
}

SymbolicElem witness_element(const SymbolicIsometryGroup& group,
                             const LimitWitness& witness, long long k) {
  SymbolicElem e = group.identity();
  const SymbolicFactor& f = group.factors()[witness.infinite_factor];
  switch (f.kind) {
    case SymbolicFactor::Kind::Grid:
      e.parts[witness.infinite_factor] = GridElem{k, 0, PointOp{}};
      break;
    case SymbolicFactor::Kind::Line:
      e.parts[witness.infinite_factor] = LineElem{k, false};
      break;
    default:
      throw std::logic_error("witness factor is not infinite");
  }
  return e;
}

PropernessReport properness_report(const SymbolicIsometryGroup& group,
                                   const NetworkSpace& space,
                                   const ComponentPartition& partition) {
  PropernessReport report;
  for (int cls = 0; cls < static_cast<int>(partition.classes.size()); ++cls) {
    PropernessReport::ClassVerdict verdict;
    verdict.cls = cls;
    verdict.non_compact = partition.non_compact[cls];
    for (int comp : partition.classes[cls]) {
      int x = first_vertex_of_component(space, comp);
      if (x < 0) continue;
      auto limit = limit_set_witness(group, space, x);
      if (!limit.empty) {
        verdict.proper = false;
        verdict.witness = limit.witness;
        break;
      }
    }
    if (verdict.non_compact && !verdict.proper) report.red_flag = true;
    report.classes.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace endscope

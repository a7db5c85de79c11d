#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "endscope/components.hpp"
#include "endscope/space.hpp"

namespace endscope {

// ---------------------------------------------------------------------------
// Class A: explicit enumeration.

// perm[x] = image of point x.
using Permutation = std::vector<int>;

// ENDSCOPE_MAX_N when set, else 16.
int default_enumeration_bound();

// All permutations preserving both the distance matrix and rho, found by
// backtracking with distance-profile pruning. Supplied rho is treated as
// intrinsic data, so rho-preservation is part of the isometry predicate.
// Group closure and inverses are verified for small result sets.
std::vector<Permutation> isometry_group_finite(const MetricSpace& space,
                                               const RhoFunction& rho,
                                               int max_n = default_enumeration_bound());

std::vector<Permutation> transporter_finite(const std::vector<Permutation>& group,
                                            int x, int y);

// ---------------------------------------------------------------------------
// Class B: symbolic groups of catalog families. One factor per graph
// component; elements compose and invert componentwise and evaluate
// exactly at any level.

// Orthogonal integer 2x2 matrix (one of the 8 square symmetries).
struct PointOp {
  int m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  friend PointOp operator*(const PointOp& a, const PointOp& b);
  PointOp inverse() const;  // transpose
  friend bool operator==(const PointOp&, const PointOp&) = default;
};
const std::vector<PointOp>& square_point_group();  // all 8

// x -> t + M x on the integer lattice.
struct GridElem {
  long long tx = 0, ty = 0;
  PointOp op;
  friend bool operator==(const GridElem&, const GridElem&) = default;
};

// i -> shift + eps*i (mod m), eps = -1 when reflect.
struct CycleElem {
  long long shift = 0;
  bool reflect = false;
  friend bool operator==(const CycleElem&, const CycleElem&) = default;
};

// t -> shift + eps*t on the integers.
struct LineElem {
  long long shift = 0;
  bool reflect = false;
  friend bool operator==(const LineElem&, const LineElem&) = default;
};

struct TrivialElem {
  friend bool operator==(const TrivialElem&, const TrivialElem&) = default;
};

using FactorElem = std::variant<TrivialElem, GridElem, CycleElem, LineElem>;

struct SymbolicFactor {
  enum class Kind { Trivial, Grid, Cycle, Line };
  Kind kind = Kind::Trivial;
  int component = 0;       // graph component the factor acts on
  long long modulus = 0;   // Cycle: m
  std::string id_prefix;   // vertex id prefix of the component

  bool infinite() const { return kind == Kind::Grid || kind == Kind::Line; }
  long long finite_order() const;  // Trivial 1, Cycle 2m; throws for infinite
  FactorElem identity() const;
  FactorElem compose(const FactorElem& a, const FactorElem& b) const;
  FactorElem invert(const FactorElem& a) const;
  // All elements of a finite factor.
  std::vector<FactorElem> enumerate() const;
};

struct SymbolicElem {
  std::vector<FactorElem> parts;  // aligned with the group's factors
  friend bool operator==(const SymbolicElem&, const SymbolicElem&) = default;
};

class SymbolicIsometryGroup {
 public:
  explicit SymbolicIsometryGroup(std::vector<SymbolicFactor> factors)
      : factors_(std::move(factors)) {}

  const std::vector<SymbolicFactor>& factors() const { return factors_; }
  const SymbolicFactor& factor_of_component(int component) const;
  bool infinite() const;

  SymbolicElem identity() const;
  SymbolicElem compose(const SymbolicElem& a, const SymbolicElem& b) const;
  SymbolicElem invert(const SymbolicElem& a) const;

  // Image coordinate of a vertex; resolves back to a vertex index when the
  // image lies inside the level window, else returns coordinate only.
  VertexCoord apply_coord(const SymbolicElem& g, const NetworkSpace& space,
                          int vertex) const;
  int apply_vertex(const SymbolicElem& g, const NetworkSpace& space,
                   int vertex) const;  // -1 when outside the window

  std::string describe() const;

 private:
  std::vector<SymbolicFactor> factors_;
};

// Registered symmetry models: grid (lattice translations with the square
// point group), cycle (dihedral), line (shifts and flips), ray (trivial),
// paper_example (grid factor times cycle factor), disjoint_cap over
// registered, pairwise distinct pieces. Errors otherwise.
SymbolicIsometryGroup symbolic_group(const NetworkSpace& space);

// ---------------------------------------------------------------------------
// Dynamics diagnostics.

struct TransporterQuery {
  bool finite = true;
  long long count = 0;                  // meaningful when finite
  std::vector<SymbolicElem> elements;   // materialized when finite and small
  std::string description;
};

TransporterQuery transporter(const SymbolicIsometryGroup& group,
                             const NetworkSpace& space, int x, int y);

// A subset of the group as a product of per-factor parts.
struct SymbolicSubset {
  enum class PartKind { Explicit, FullFactor, TranslationsOnly };
  struct Part {
    PartKind kind = PartKind::Explicit;
    std::vector<FactorElem> elems;  // PartKind::Explicit
  };
  std::vector<Part> parts;  // aligned with the group's factors
};

struct PrecompactnessResult {
  bool precompact = true;
  int witness_vertex = -1;  // a point with infinite orbit, when not
};

// Precompact in G (pointwise convergence) read as: every orbit F.z has
// compact closure; for the discrete symbolic catalog, every orbit finite.
PrecompactnessResult is_precompact(const SymbolicIsometryGroup& group,
                                   const SymbolicSubset& subset,
                                   const NetworkSpace& space);

struct KofFResult {
  std::vector<int> vertices;          // points with finite F-orbit, sorted
  std::vector<int> classes;           // pseudo-component classes covered
  bool clopen_certified = false;      // exact union of classes
};

KofFResult k_of_f(const SymbolicIsometryGroup& group, const SymbolicSubset& subset,
                  const NetworkSpace& space, const ComponentPartition& partition);

// A divergent family g_k with g_k(x) constant: g_k is the k-th power of a
// translation generator in an infinite factor acting away from x.
struct LimitWitness {
  int infinite_factor;       // factor index supplying divergence
  int fixed_vertex;          // x; every g_k fixes it
  int divergence_vertex;     // its g_k-images are pairwise distinct
  std::string description;
};

struct LimitSetResult {
  bool empty = true;
  std::optional<LimitWitness> witness;
};

LimitSetResult limit_set_witness(const SymbolicIsometryGroup& group,
                                 const NetworkSpace& space, int x);

// k-th element of the witness family, as a full group element.
SymbolicElem witness_element(const SymbolicIsometryGroup& group,
                             const LimitWitness& witness, long long k);

struct PropernessReport {
  struct ClassVerdict {
    int cls = 0;
    bool non_compact = false;
    bool proper = true;
    std::optional<LimitWitness> witness;
  };
  std::vector<ClassVerdict> classes;
  // A non-proper non-compact class would contradict the expected
  // structure; it signals a model bug.
  bool red_flag = false;
};

PropernessReport properness_report(const SymbolicIsometryGroup& group,
                                   const NetworkSpace& space,
                                   const ComponentPartition& partition);

}  // namespace endscope

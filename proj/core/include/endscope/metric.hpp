#pragma once

#include <string>
#include <vector>

#include "endscope/graph.hpp"
#include "endscope/rational.hpp"

namespace endscope {

// Symmetric matrix of extended rationals. +inf entries mark disconnected
// pairs; they must be capped away before any rho / pseudo-component
// analysis.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), entries_(static_cast<std::size_t>(n) * n, ExtRational(0)) {}

  int size() const { return n_; }
  const ExtRational& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }
  void set(int i, int j, ExtRational value) {
    entries_[static_cast<std::size_t>(i) * n_ + j] = value;
    entries_[static_cast<std::size_t>(j) * n_ + i] = std::move(value);
  }
  bool has_infinite_entry() const;

 private:
  int n_ = 0;
  std::vector<ExtRational> entries_;
};

struct MetricViolation {
  enum class Kind { ZeroDiagonal, Symmetry, Positivity, Triangle };
  Kind kind;
  int i, j, k;  // witness indices; k = -1 except for Triangle
  std::string describe(const std::vector<std::string>& point_ids) const;
};

struct ValidationReport {
  std::vector<MetricViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Checks zero diagonal, symmetry, positivity and the triangle inequality
// with exact arithmetic. Violations are report content, never exceptions.
ValidationReport validate_metric(const DistanceMatrix& m);

// Exact shortest-path metric of a finite weighted graph; +inf between
// different connected components.
DistanceMatrix shortest_path_metric(const WeightedGraph& g);

// Replaces every entry by min(entry, c); +inf becomes c. Output is a
// genuine metric for any valid (possibly infinity-bearing) input.
DistanceMatrix cap_metric(const DistanceMatrix& m, const Rational& cap);

// Open ball { j : d(x,j) < r }, strict inequality, x included (d=0 < r).
std::vector<int> ball(const DistanceMatrix& m, int x, const Rational& r);

}  // namespace endscope

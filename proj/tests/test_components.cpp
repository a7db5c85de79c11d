#include <doctest.h>

#include "endscope/catalog.hpp"
#include "endscope/components.hpp"
#include "test_util.hpp"

using namespace endscope;

namespace {

DistanceMatrix two_points(const Rational& dist) {
  DistanceMatrix d(2);
  d.set(0, 1, ExtRational(dist));
  return d;
}

RhoFunction rho_of(std::vector<ExtRational> values) {
  RhoFunction rho;
  rho.values = std::move(values);
  return rho;
}

}  // namespace

TEST_CASE("proximity arcs follow the strict inequality exactly") {
  auto d = two_points(Rational(1));

  auto both = proximity_digraph(d, rho_of({ExtRational::infinity(), ExtRational::infinity()}));
  CHECK(both.has_arc(0, 1));
  CHECK(both.has_arc(1, 0));

  // d == rho: 1 < 1 is false, so no arcs at all
  auto none = proximity_digraph(d, rho_of({ExtRational(1), ExtRational(1)}));
  CHECK(none.arcs[0].empty());
  CHECK(none.arcs[1].empty());

  auto oneway = proximity_digraph(d, rho_of({ExtRational(2), ExtRational(Rational(1, 2))}));
  CHECK(oneway.has_arc(0, 1));
  CHECK_FALSE(oneway.has_arc(1, 0));
}

TEST_CASE("transitive closure composes chains") {
  ProximityDigraph empty;
  empty.node_count = 3;
  empty.arcs.resize(3);
  auto closed = transitive_closure(empty);
  for (const auto& out : closed.arcs) CHECK(out.empty());

  ProximityDigraph chain;
  chain.node_count = 3;
  chain.arcs = {{1}, {2}, {}};
  auto star = transitive_closure(chain);
  CHECK(star.has_arc(0, 2));
  CHECK_FALSE(star.has_arc(2, 0));
}

TEST_CASE("closure of a 10-point line with rho 3/2 is complete") {
  const int n = 10;
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.set(i, j, ExtRational(j - i));
  auto g = proximity_digraph(d, rho_of(std::vector<ExtRational>(n, ExtRational(Rational(3, 2)))));
  auto star = transitive_closure(g);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) CHECK(star.has_arc(x, y));
}

TEST_CASE("one-way proximity gives singleton classes") {
  auto d = two_points(Rational(1));
  auto part = scc_partition(
      proximity_digraph(d, rho_of({ExtRational(2), ExtRational(Rational(1, 2))})));
  CHECK(part.classes.size() == 2);
}

TEST_CASE("rho identically infinite collapses everything into one class") {
  std::mt19937 rng(5);
  MetricSpace space = testing::random_site_space(rng, 10, 0);
  RhoFunction rho = rho_finite(space);
  REQUIRE(rho.all_infinite());
  auto part = pseudo_components(space, rho);
  CHECK(part.classes.size() == 1);
  CHECK_FALSE(part.non_compact[0]);
}

TEST_CASE("SCC partition equals the literal-definition partition") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 300; ++trial) {
    MetricSpace space = testing::random_site_space(rng, 12);
    RhoFunction rho = rho_finite(space);
    auto fast = pseudo_components(space, rho);
    auto brute = testing::brute_force_classes(space.d, rho);
    CHECK(testing::same_partition(fast.classes, brute));
  }
}

TEST_CASE("the partition is an equivalence relation") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    MetricSpace space = testing::random_site_space(rng, 10);
    auto part = pseudo_components(space, rho_finite(space));
    std::vector<bool> seen(space.point_count(), false);
    for (const auto& cls : part.classes)
      for (int p : cls) {
        CHECK_FALSE(seen[p]);  // classes are disjoint
        seen[p] = true;
        CHECK(part.class_of[p] == &cls - part.classes.data());
      }
    for (bool s : seen) CHECK(s);  // and they cover everything
  }
}

TEST_CASE("class-A classes are non-compact exactly when they contain a site") {
  DistanceMatrix d(3);
  d.set(0, 1, ExtRational(1));
  d.set(1, 2, ExtRational(1));
  d.set(0, 2, ExtRational(2));
  RhoSpec spec;
  spec.kind = RhoSpec::Kind::Sites;
  spec.sites.push_back({0, Rational(2)});
  auto space = build_finite_space({"s", "x", "y"}, d, spec);
  auto part = pseudo_components(space, rho_finite(space));
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    bool has_site = false;
    for (int p : part.classes[c]) has_site |= (p == 0);
    CHECK(part.non_compact[c] == has_site);
  }
}

TEST_CASE("capped class-B spaces split into their graph components") {
  auto paper = catalog_family("paper_example", {{"m", "12"}, {"w", "1/10"}}, 5);
  auto part = pseudo_components(paper, rho_network(paper));
  REQUIRE(part.classes.size() == 2);
  CHECK(part.non_compact[part.class_of[0]]);       // grid component
  CHECK_FALSE(part.non_compact[part.class_of[1]]); // cycle component
  CHECK(class_vertices(paper, part, part.class_of[1]).size() == 12);
}

TEST_CASE("compact capped unions merge into a single class") {
  // All components compact => rho is infinite => complete proximity digraph.
  auto space = catalog_family(
      "disjoint_cap", {{"pieces", "cycle(3),cycle(5)"}, {"c", "1"}}, 1);
  auto part = pseudo_components(space, rho_network(space));
  CHECK(part.classes.size() == 1);
  CHECK_FALSE(part.non_compact[0]);
}

TEST_CASE("uncapped connected families form one non-compact class") {
  auto grid = catalog_family("grid", {}, 4);
  auto part = pseudo_components(grid, rho_network(grid));
  REQUIRE(part.classes.size() == 1);
  CHECK(part.non_compact[0]);
}

#include <benchmark/benchmark.h>

#include "endscope/catalog.hpp"
#include "endscope/components.hpp"
#include "endscope/ends.hpp"
#include "endscope/isometry.hpp"

using namespace endscope;

namespace {

void BM_GridMetric(benchmark::State& state) {
  auto grid = catalog_family("grid", {}, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto m = shortest_path_metric(grid.graph);
    benchmark::DoNotOptimize(m);
  }
  state.SetComplexityN(grid.graph.vertex_count());
}
BENCHMARK(BM_GridMetric)->Arg(3)->Arg(5)->Arg(8)->Complexity();

void BM_PseudoComponents(benchmark::State& state) {
  // Worst case for the arc scan: a long line with a site, giving a dense
  // mix of one-way and mutual proximity arcs.
  const int n = static_cast<int>(state.range(0));
  std::vector<std::string> ids;
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i) {
    ids.push_back("p" + std::to_string(i));
    for (int j = i + 1; j < n; ++j) d.set(i, j, ExtRational(j - i));
  }
  RhoSpec spec;
  spec.kind = RhoSpec::Kind::Sites;
  spec.sites.push_back({0, Rational(2)});
  auto space = build_finite_space(std::move(ids), std::move(d), spec);
  RhoFunction rho = rho_finite(space);
  for (auto _ : state) {
    auto partition = pseudo_components(space, rho);
    benchmark::DoNotOptimize(partition);
  }
}
BENCHMARK(BM_PseudoComponents)->Arg(16)->Arg(64)->Arg(128);

void BM_EndsPipeline(benchmark::State& state) {
  auto schedule = default_schedule("grid", {}, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto estimate = count_ends("grid", {}, schedule);
    benchmark::DoNotOptimize(estimate);
  }
}
BENCHMARK(BM_EndsPipeline)->Arg(6)->Arg(8);

void BM_IsometryEnumeration(benchmark::State& state) {
  auto net = catalog_family("cycle", {{"m", std::to_string(state.range(0))}}, 1);
  std::vector<std::string> ids;
  for (int v = 0; v < net.graph.vertex_count(); ++v) ids.push_back(net.graph.id_of(v));
  auto space = build_finite_space(std::move(ids), net.metric(), {});
  RhoFunction rho = rho_finite(space);
  for (auto _ : state) {
    auto group = isometry_group_finite(space, rho);
    benchmark::DoNotOptimize(group);
  }
}
BENCHMARK(BM_IsometryEnumeration)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();

// Acceptance suite: one pass/fail line per criterion, exit 0 only when
// every criterion passes. Oracles here are independent of the library's
// computation paths (see test_util.hpp).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>

#include "endscope/catalog.hpp"
#include "endscope/ends.hpp"
#include "endscope/theorem1.hpp"
#include "test_util.hpp"

using namespace endscope;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
  std::printf("[%d] %-28s %s (%.1fs)%s%s\n", id, name.c_str(),
              pass ? "PASS" : "FAIL", seconds,
              detail.empty() ? "" : " ", detail.c_str());
  if (!pass) ++g_failures;
}

template <typename Fn>
void criterion(int id, const std::string& name, Fn&& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(id, name, pass, seconds, detail);
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(ENDSCOPE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::map<std::string, std::string> paper_params(int m, const std::string& w) {
  return {{"m", std::to_string(m)}, {"w", w}};
}

// ---------------------------------------------------------------------------

bool definition_fidelity(std::string& detail) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    MetricSpace space = testing::random_site_space(rng, 12);
    RhoFunction rho = rho_finite(space);
    auto fast = pseudo_components(space, rho);
    auto brute = testing::brute_force_classes(space.d, rho);
    if (!testing::same_partition(fast.classes, brute)) {
      detail = "partition mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "1000 spaces, n <= 12";
  return true;
}

bool lipschitz_property(std::string& detail) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    MetricSpace space = testing::random_site_space(rng, 12);
    if (check_lipschitz(rho_finite(space), space.d)) {
      detail = "violation at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "1000 spaces";
  return true;
}

bool isometry_invariance(std::string& detail) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    MetricSpace space = testing::random_site_space(rng, 10);
    RhoFunction rho = rho_finite(space);
    auto partition = pseudo_components(space, rho);
    for (const auto& g : isometry_group_finite(space, rho))
      for (int x = 0; x < space.point_count(); ++x) {
        if (!(rho.at(g[x]) == rho.at(x))) {
          detail = "rho not invariant at trial " + std::to_string(trial);
          return false;
        }
        std::vector<int> image;
        for (int p : partition.classes[partition.class_of[x]]) image.push_back(g[p]);
        std::sort(image.begin(), image.end());
        if (image != partition.classes[partition.class_of[g[x]]]) {
          detail = "class not equivariant at trial " + std::to_string(trial);
          return false;
        }
      }
  }
  detail = "200 spaces, full groups";
  return true;
}

bool ends_verdicts(std::string& detail) {
  const std::vector<std::tuple<std::string, std::map<std::string, std::string>,
                               std::string>> expected = {
      {"ray", {}, "finite(1)"},
      {"line", {}, "finite(2)"},
      {"ladder", {}, "finite(2)"},
      {"grid", {}, "finite(1)"},
      {"tree", {{"k", "3"}}, "unbounded"},
      {"cycle", {{"m", "12"}}, "compact"},
  };
  for (const auto& [family, params, verdict] : expected) {
    auto estimate = count_ends(family, params, default_schedule(family, params, 12));
    if (estimate.verdict_string() != verdict) {
      detail = family + ": got " + estimate.verdict_string() + ", want " + verdict;
      return false;
    }
  }
  detail = "6 families, window 4, levels <= 12";
  return true;
}

bool counterexample_reproduction(std::string& detail) {
  auto params = paper_params(12, "1/10");
  StructureReport report =
      theorem1_check("paper_example", params, 5,
                     default_schedule("paper_example", params, 8));
  if (!report.applicable || report.ends.verdict_string() != "finite(1)") {
    detail = "gate: " + report.gate_rationale;
    return false;
  }
  if (report.class_count != 2 || report.non_compact_classes != 1) {
    detail = "partition shape wrong";
    return false;
  }
  if (report.compact_rest_vertices != 12) {
    detail = "compact remainder has " + std::to_string(report.compact_rest_vertices) +
             " vertices";
    return false;
  }
  bool non_compact_proper = false, compact_witnessed = false;
  for (const auto& v : report.properness.classes) {
    if (v.non_compact) non_compact_proper = v.proper;
    else compact_witnessed = !v.proper && v.witness.has_value();
  }
  if (!non_compact_proper || !compact_witnessed || !report.red_flags.empty()) {
    detail = "properness verdicts wrong";
    return false;
  }

  // Replay the witness concretely: each g_k fixes the cycle vertex while
  // the grid images diverge pairwise.
  auto space = catalog_family("paper_example", params, 5);
  auto group = symbolic_group(space);
  LimitWitness witness;
  for (const auto& v : report.properness.classes)
    if (v.witness) witness = *v.witness;
  std::set<std::pair<long long, long long>> images;
  for (long long k = 1; k <= 20; ++k) {
    SymbolicElem g = witness_element(group, witness, k);
    if (group.apply_vertex(g, space, witness.fixed_vertex) != witness.fixed_vertex) {
      detail = "witness does not fix its vertex";
      return false;
    }
    VertexCoord c = group.apply_coord(g, space, witness.divergence_vertex);
    if (!images.insert({c.a, c.b}).second) {
      detail = "witness images collide";
      return false;
    }
  }

  if (run_cli("theorem1 --catalog paper_example --params m=12 w=1/10 --level 5") != 0) {
    detail = "cli exit code nonzero";
    return false;
  }
  detail = "structure + witness replay + cli exit 0";
  return true;
}

bool consistency_sweep(std::string& detail) {
  int runs = 0;
  auto check = [&](const std::string& family,
                   const std::map<std::string, std::string>& params, int level) {
    StructureReport r =
        theorem1_check(family, params, level, default_schedule(family, params, 8));
    ++runs;
    if (!r.red_flags.empty()) {
      detail = family + " level " + std::to_string(level) + " red-flagged";
      return false;
    }
    if (r.applicable &&
        (r.class_count < 1 || r.non_compact_classes != 1)) {
      detail = family + " level " + std::to_string(level) + " structure wrong";
      return false;
    }
    return true;
  };
  for (int level = 2; level <= 8; ++level) {
    if (!check("grid", {}, level)) return false;
    if (!check("ray", {}, level)) return false;
  }
  for (int m = 3; m <= 20; ++m)
    for (const char* w : {"1/10", "1/3"})
      for (int level : {3, 5, 8})
        if (!check("paper_example", paper_params(m, w), level)) return false;
  detail = std::to_string(runs) + " runs, zero red flags";
  return true;
}

bool clopen_certificates(std::string& detail) {
  auto space = catalog_family("paper_example", paper_params(12, "1/10"), 5);
  auto group = symbolic_group(space);
  auto partition = pseudo_components(space, rho_network(space));

  std::mt19937 rng(77);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> shift(0, 11);
  std::uniform_int_distribution<int> small(-5, 5);
  std::uniform_int_distribution<int> pg(0, 7);

  for (int trial = 0; trial < 100; ++trial) {
    SymbolicSubset subset;
    for (const auto& factor : group.factors()) {
      SymbolicSubset::Part part;
      switch (kind(rng)) {
        case 0: part.kind = SymbolicSubset::PartKind::FullFactor; break;
        case 1: part.kind = SymbolicSubset::PartKind::TranslationsOnly; break;
        default: {
          part.kind = SymbolicSubset::PartKind::Explicit;
          for (int e = count(rng); e > 0; --e) {
            if (factor.kind == SymbolicFactor::Kind::Grid)
              part.elems.push_back(
                  GridElem{small(rng), small(rng), square_point_group()[pg(rng)]});
            else
              part.elems.push_back(CycleElem{shift(rng), pg(rng) % 2 == 1});
          }
        }
      }
      subset.parts.push_back(std::move(part));
    }

    auto result = k_of_f(group, subset, space, partition);
    if (!result.clopen_certified) {
      detail = "certificate missing at trial " + std::to_string(trial);
      return false;
    }
    std::vector<int> by_classes;
    for (int cls : result.classes)
      for (int v : class_vertices(space, partition, cls)) by_classes.push_back(v);
    std::sort(by_classes.begin(), by_classes.end());
    if (by_classes != result.vertices) {
      detail = "K(F) not a union of classes at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "100 random subsets";
  return true;
}

bool cap_invariance(std::string& detail) {
  const std::vector<std::pair<std::string, std::map<std::string, std::string>>>
      families = {{"ray", {}},       {"line", {}},
                  {"ladder", {}},    {"grid", {}},
                  {"tree", {{"k", "3"}}}, {"cycle", {{"m", "12"}}}};
  for (const auto& [family, params] : families) {
    auto schedule = default_schedule(family, params, 10);
    auto uncapped = count_ends(family, params, schedule);
    for (const char* cap : {"1/2", "1", "3"}) {
      for (std::size_t i = 0; i < schedule.entries.size(); ++i) {
        auto space = catalog_family(family, params, schedule.entries[i].level);
        if (space.is_compact()) continue;  // no escaping rows exist either way
        space.cap = parse_rational(cap);
        if (escaping_components(space, schedule.entries[i].radius) !=
            uncapped.rows[i].escaping) {
          detail = family + " cap " + cap + " changes level " +
                   std::to_string(schedule.entries[i].level);
          return false;
        }
      }
    }
  }
  // Families with an intrinsic cap parameter: the verdict itself must agree.
  std::string base;
  for (const char* cap : {"1/2", "1", "3"}) {
    std::map<std::string, std::string> params{{"pieces", "grid,cycle(9)"},
                                              {"c", cap}};
    auto verdict = count_ends("disjoint_cap", params,
                              default_schedule("disjoint_cap", params, 10))
                       .verdict_string();
    if (base.empty()) base = verdict;
    if (verdict != base) {
      detail = "disjoint_cap verdict varies with cap";
      return false;
    }
  }
  detail = "6 families x 3 caps + capped unions";
  return true;
}

bool enumeration_oracle(std::string& detail) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    MetricSpace space = testing::random_site_space(rng, 7);
    RhoFunction rho = rho_finite(space);
    if (isometry_group_finite(space, rho).size() !=
        testing::brute_force_isometries(space, rho).size()) {
      detail = "order mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  for (int m = 3; m <= 7; ++m) {
    auto net = catalog_family("cycle", {{"m", std::to_string(m)}}, 1);
    std::vector<std::string> ids;
    for (int v = 0; v < net.graph.vertex_count(); ++v) ids.push_back(net.graph.id_of(v));
    auto space = build_finite_space(std::move(ids), net.metric(), {});
    if (isometry_group_finite(space, rho_finite(space)).size() !=
        static_cast<std::size_t>(2 * m)) {
      detail = "cycle(" + std::to_string(m) + ") order wrong";
      return false;
    }
  }
  detail = "100 random spaces + cycles m <= 7";
  return true;
}

}  // namespace

int main() {
  criterion(1, "definition fidelity", definition_fidelity);
  criterion(2, "lipschitz property", lipschitz_property);
  criterion(3, "isometry invariance", isometry_invariance);
  criterion(4, "ends verdicts", ends_verdicts);
  criterion(5, "counterexample reproduction", counterexample_reproduction);
  criterion(6, "consistency sweep", consistency_sweep);
  criterion(7, "clopen certificates", clopen_certificates);
  criterion(8, "cap invariance", cap_invariance);
  criterion(9, "enumeration oracle", enumeration_oracle);
  if (g_failures == 0) {
    std::puts("acceptance: all criteria passed");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}

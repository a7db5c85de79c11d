#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "endscope/catalog.hpp"
#include "endscope/dot.hpp"
#include "endscope/json_io.hpp"

namespace {

using namespace endscope;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitRedFlag = 3;

struct InputOpts {
  std::string file;
  std::string catalog;
  std::vector<std::string> params;
  int level = 5;
  std::string cap;
};

struct OutputOpts {
  std::string json_path;
  std::string dot_path;
};

void add_input_flags(CLI::App* cmd, InputOpts& in, bool catalog_only = false) {
  if (!catalog_only)
    cmd->add_option("file", in.file, "JSON space presentation");
  cmd->add_option("--catalog", in.catalog, "catalog family name");
  cmd->add_option("--params", in.params, "family parameters as K=V");
  cmd->add_option("--level", in.level, "truncation level");
  cmd->add_option("--cap", in.cap, "cap value num/den");
}

std::map<std::string, std::string> param_map(const std::vector<std::string>& kv) {
  std::map<std::string, std::string> out;
  for (const auto& entry : kv) {
    auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw ParseError("bad --params entry '" + entry + "', expected K=V");
    out[entry.substr(0, eq)] = entry.substr(eq + 1);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Canonical digest text for catalog invocations.
std::string catalog_digest_text(const std::string& family,
                                const std::map<std::string, std::string>& params,
                                int level) {
  std::string text = "catalog:" + family + ":level=" + std::to_string(level);
  for (const auto& [k, v] : params) text += ":" + k + "=" + v;
  return text;
}

struct LoadedInput {
  SpaceInput space;
  std::string digest;
  std::string raw_text;  // file inputs only
};

LoadedInput load(const InputOpts& in) {
  if (!in.catalog.empty()) {
    auto params = param_map(in.params);
    NetworkSpace space = catalog_family(in.catalog, params, in.level);
    if (!in.cap.empty()) space.cap = parse_rational(in.cap);
    return {std::move(space),
            input_digest(catalog_digest_text(in.catalog, params, in.level)), ""};
  }
  if (in.file.empty()) throw ParseError("no input: give a file or --catalog");
  std::string text = read_file(in.file);
  SpaceInput space = parse_space_json(text);
  if (!in.cap.empty())
    if (auto* net = std::get_if<NetworkSpace>(&space)) net->cap = parse_rational(in.cap);
  return {std::move(space), input_digest(text), std::move(text)};
}

void emit(const ordered_json& report, const OutputOpts& out) {
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out.json_path.empty()) {
    std::ofstream f(out.json_path);
    f << text;
  }
}

std::pair<int, int> parse_level_range(const std::string& text, int fallback_lo,
                                      int fallback_hi) {
  if (text.empty()) return {fallback_lo, fallback_hi};
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

// ---------------------------------------------------------------------------

int cmd_validate(const InputOpts& in, const OutputOpts& out) {
  ordered_json report;
  bool valid = true;

  if (in.catalog.empty() && !in.file.empty()) {
    std::string text = read_file(in.file);
    report = report_header(input_digest(text));
    if (auto raw = parse_metric_raw(text)) {
      ValidationReport metric = validate_metric(raw->d);
      report["metric"] = validation_to_json(metric, raw->points);
      valid = metric.valid();
      if (valid) {
        try {
          build_finite_space(raw->points, raw->d, raw->rho_spec);
          report["rho"] = ordered_json{{"valid", true}};
        } catch (const std::invalid_argument& e) {
          report["rho"] = ordered_json{{"valid", false}, {"finding", e.what()}};
          valid = false;
        }
      }
      emit(report, out);
      return valid ? kExitOk : kExitValidation;
    }
  }

  // network / catalog inputs: building is validating
  try {
    LoadedInput loaded = load(in);
    report = report_header(loaded.digest);
    report["valid"] = true;
    emit(report, out);
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    report = report_header("");
    report["valid"] = false;
    report["finding"] = e.what();
    emit(report, out);
    return kExitValidation;
  }
}

int cmd_rho(const InputOpts& in, const OutputOpts& out) {
  LoadedInput loaded = load(in);
  ordered_json report = report_header(loaded.digest);
  if (const auto* metric = std::get_if<MetricSpace>(&loaded.space)) {
    RhoFunction rho = rho_finite(*metric);
    report["rho"] = rho_to_json(rho, point_names(*metric));
    report["heine_borel"] = rho.all_infinite();
  } else {
    const auto& net = std::get<NetworkSpace>(loaded.space);
    RhoFunction rho = rho_network(net);
    report["rho"] = rho_to_json(rho, vertex_names(net));
    report["heine_borel"] = rho.all_infinite();
  }
  emit(report, out);
  return kExitOk;
}

int cmd_components(const InputOpts& in, const OutputOpts& out) {
  LoadedInput loaded = load(in);
  ordered_json report = report_header(loaded.digest);
  std::string dot;
  if (const auto* metric = std::get_if<MetricSpace>(&loaded.space)) {
    RhoFunction rho = rho_finite(*metric);
    ProximityDigraph digraph = proximity_digraph(metric->d, rho);
    ComponentPartition partition = pseudo_components(*metric, rho);
    report["rho"] = rho_to_json(rho, point_names(*metric));
    report["partition"] = partition_to_json(partition, point_names(*metric));
    dot = dot_export(metric->d, rho, digraph, partition, point_names(*metric));
  } else {
    const auto& net = std::get<NetworkSpace>(loaded.space);
    RhoFunction rho = rho_network(net);
    ComponentPartition partition = pseudo_components(net, rho);
    // Quotient view: one node per graph component, cross-distance = cap.
    const int k = net.component_count;
    DistanceMatrix quotient(k);
    RhoFunction qrho;
    for (int a = 0; a < k; ++a) {
      qrho.values.push_back(rho.values.empty() ? ExtRational::infinity()
                                               : rho.values.front());
      for (int b = a + 1; b < k; ++b)
        quotient.set(a, b, net.cap ? ExtRational(*net.cap) : ExtRational::infinity());
    }
    ProximityDigraph digraph = proximity_digraph(quotient, qrho);
    report["rho_constant"] =
        format_ext(rho.values.empty() ? ExtRational::infinity() : rho.values.front());
    report["partition"] = partition_to_json(partition, component_names(net));
    dot = dot_export(quotient, qrho, digraph, partition, component_names(net));
  }
  if (!out.dot_path.empty()) {
    std::ofstream f(out.dot_path);
    f << dot;
  }
  emit(report, out);
  return kExitOk;
}

struct ScheduleOpts {
  std::string levels;
  int window = 4;
};

EndsSchedule make_schedule(const std::string& family,
                           const std::map<std::string, std::string>& params,
                           const ScheduleOpts& opts) {
  auto [lo, hi] = parse_level_range(opts.levels, 2, 8);
  return default_schedule(family, params, hi, opts.window, lo);
}

int cmd_ends(const InputOpts& in, const ScheduleOpts& sched, const OutputOpts& out) {
  auto params = param_map(in.params);
  EndsSchedule schedule = make_schedule(in.catalog, params, sched);
  EndsEstimate estimate = count_ends(in.catalog, params, schedule);
  ordered_json report =
      report_header(input_digest(catalog_digest_text(in.catalog, params, 0)));
  report["ends"] = ends_to_json(estimate);
  emit(report, out);
  return kExitOk;
}

int cmd_jspace(const InputOpts& in, const ScheduleOpts& sched, const OutputOpts& out) {
  auto params = param_map(in.params);
  EndsSchedule schedule = make_schedule(in.catalog, params, sched);
  JSpaceVerdict verdict = is_j_space(in.catalog, params, schedule);
  ordered_json report =
      report_header(input_digest(catalog_digest_text(in.catalog, params, 0)));
  report["j_space"] = verdict.value == JSpaceVerdict::Value::Yes ? "yes"
                      : verdict.value == JSpaceVerdict::Value::No ? "no"
                                                                  : "inconclusive";
  report["rationale"] = verdict.rationale;
  report["ends"] = ends_to_json(verdict.ends);
  emit(report, out);
  return kExitOk;
}

int cmd_theorem1(const InputOpts& in, const ScheduleOpts& sched, const OutputOpts& out) {
  auto params = param_map(in.params);
  EndsSchedule schedule = make_schedule(in.catalog, params, sched);
  StructureReport report = theorem1_check(in.catalog, params, in.level, schedule);
  ordered_json j =
      report_header(input_digest(catalog_digest_text(in.catalog, params, in.level)));
  j["theorem1"] = structure_to_json(report);
  emit(j, out);
  if (!report.pass()) return kExitRedFlag;
  return kExitOk;
}

int cmd_iso(const InputOpts& in, const std::string& from, const std::string& to,
            const OutputOpts& out) {
  LoadedInput loaded = load(in);
  ordered_json report = report_header(loaded.digest);
  if (const auto* metric = std::get_if<MetricSpace>(&loaded.space)) {
    RhoFunction rho = rho_finite(*metric);
    auto group = isometry_group_finite(*metric, rho);
    report["kind"] = "enumerated";
    report["order"] = group.size();
    if (!from.empty() || !to.empty()) {
      int x = metric->index_of(from);
      int y = metric->index_of(to);
      if (x < 0 || y < 0) throw ParseError("transporter endpoints must be point ids");
      auto t = transporter_finite(group, x, y);
      report["transporter"] =
          ordered_json{{"from", from}, {"to", to}, {"count", t.size()}};
    }
  } else {
    const auto& net = std::get<NetworkSpace>(loaded.space);
    SymbolicIsometryGroup group = symbolic_group(net);
    report["kind"] = "symbolic";
    report["group"] = group.describe();
    report["infinite"] = group.infinite();
    if (!from.empty() || !to.empty()) {
      int x = net.graph.index_of(from);
      int y = net.graph.index_of(to);
      if (x < 0 || y < 0) throw ParseError("transporter endpoints must be vertex ids");
      TransporterQuery q = transporter(group, net, x, y);
      ordered_json t;
      t["from"] = from;
      t["to"] = to;
      t["finite"] = q.finite;
      if (q.finite) t["count"] = q.count;
      t["description"] = q.description;
      report["transporter"] = std::move(t);
    }
  }
  emit(report, out);
  return kExitOk;
}

int cmd_catalog_list(const OutputOpts& out) {
  ordered_json families = ordered_json::array();
  for (const auto& info : catalog_list()) {
    ordered_json f;
    f["name"] = info.name;
    f["params"] = info.params;
    f["summary"] = info.summary;
    families.push_back(std::move(f));
  }
  ordered_json report;
  report["catalog"] = std::move(families);
  emit(report, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"endscope: pseudo-components, radius of compactness, ends and "
               "properness diagnostics for locally compact metric presentations"};
  app.require_subcommand(1);

  InputOpts in;
  OutputOpts out;
  ScheduleOpts sched;
  std::string iso_from, iso_to;

  auto* validate = app.add_subcommand("validate", "validate a space presentation");
  add_input_flags(validate, in);
  validate->add_option("--json", out.json_path, "also write the report here");

  auto* rho = app.add_subcommand("rho", "radius of compactness table");
  add_input_flags(rho, in);
  rho->add_option("--json", out.json_path);

  auto* components = app.add_subcommand("components", "pseudo-component partition");
  add_input_flags(components, in);
  components->add_option("--json", out.json_path);
  components->add_option("--dot", out.dot_path, "write proximity digraph as DOT");

  auto* ends = app.add_subcommand("ends", "Freudenthal end count of a catalog family");
  add_input_flags(ends, in, /*catalog_only=*/true);
  ends->add_option("--levels", sched.levels, "level range a..b (default 2..8)");
  ends->add_option("--window", sched.window, "stabilization window (default 4)");
  ends->add_option("--json", out.json_path);

  auto* jspace = app.add_subcommand("jspace", "one-end / J-space predicate");
  add_input_flags(jspace, in, /*catalog_only=*/true);
  jspace->add_option("--levels", sched.levels);
  jspace->add_option("--window", sched.window);
  jspace->add_option("--json", out.json_path);

  auto* theorem1 = app.add_subcommand(
      "theorem1", "ends gate, structure check and properness report");
  add_input_flags(theorem1, in, /*catalog_only=*/true);
  theorem1->add_option("--levels", sched.levels);
  theorem1->add_option("--window", sched.window);
  theorem1->add_option("--json", out.json_path);

  auto* iso = app.add_subcommand("iso", "isometry group description");
  add_input_flags(iso, in);
  iso->add_option("--from", iso_from, "transporter source point/vertex id");
  iso->add_option("--to", iso_to, "transporter target point/vertex id");
  iso->add_option("--json", out.json_path);

  auto* catalog = app.add_subcommand("catalog", "catalog utilities");
  auto* catalog_list_cmd = catalog->add_subcommand("list", "list families");
  catalog->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(in, out);
    if (*rho) return cmd_rho(in, out);
    if (*components) return cmd_components(in, out);
    if (*ends) return cmd_ends(in, sched, out);
    if (*jspace) return cmd_jspace(in, sched, out);
    if (*theorem1) return cmd_theorem1(in, sched, out);
    if (*iso) return cmd_iso(in, iso_from, iso_to, out);
    if (*catalog_list_cmd) return cmd_catalog_list(out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::logic_error& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return kExitRedFlag;
  }
  return kExitOk;
}

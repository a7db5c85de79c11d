#include "endscope/json_io.hpp"

#include <cstdint>

#include "endscope/catalog.hpp"

namespace endscope {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string json_rational_string(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(what + ": expected a \"num/den\" string");
}

RawMetricInput parse_metric_fields(const json& j) {
  std::vector<std::string> points;
  for (const auto& p : j.at("points")) points.push_back(p.get<std::string>());
  const int n = static_cast<int>(points.size());

  const auto& rows = j.at("d");
  if (static_cast<int>(rows.size()) != n) throw ParseError("d: row count mismatch");
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw ParseError("d: column count mismatch");
    for (int k = 0; k < n; ++k)
      d.set(i, k, parse_ext(json_rational_string(rows[i][k], "d entry")));
  }

  RhoSpec spec;
  if (j.contains("rho")) {
    const auto& r = j.at("rho");
    std::string kind = r.at("kind").get<std::string>();
    if (kind == "infinite") {
      spec.kind = RhoSpec::Kind::AllInfinite;
    } else if (kind == "sites") {
      spec.kind = RhoSpec::Kind::Sites;
      for (const auto& s : r.at("sites")) {
        std::string id = s.at("point").get<std::string>();
        int idx = -1;
        for (int i = 0; i < n; ++i)
          if (points[i] == id) idx = i;
        if (idx < 0) throw ParseError("rho site refers to unknown point '" + id + "'");
        spec.sites.push_back({idx, parse_rational(json_rational_string(s.at("delta"), "delta"))});
      }
    } else if (kind == "explicit") {
      spec.kind = RhoSpec::Kind::Explicit;
      const auto& values = r.at("values");
      spec.values.assign(n, ExtRational::infinity());
      for (int i = 0; i < n; ++i) {
        if (!values.contains(points[i]))
          throw ParseError("rho value missing for point '" + points[i] + "'");
        spec.values[i] = parse_ext(json_rational_string(values.at(points[i]), "rho value"));
      }
    } else {
      throw ParseError("unknown rho kind '" + kind + "'");
    }
  }
  return RawMetricInput{std::move(points), std::move(d), std::move(spec)};
}

MetricSpace parse_metric(const json& j) {
  RawMetricInput raw = parse_metric_fields(j);
  return build_finite_space(std::move(raw.points), std::move(raw.d),
                            std::move(raw.rho_spec));
}

NetworkSpace parse_network(const json& j) {
  WeightedGraph g;
  for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
  for (const auto& e : j.at("edges")) {
    if (e.size() != 3) throw ParseError("edge: expected [u, v, \"w\"]");
    int u = g.index_of(e[0].get<std::string>());
    int v = g.index_of(e[1].get<std::string>());
    if (u < 0 || v < 0) throw ParseError("edge endpoint not in vertex list");
    g.add_edge(u, v, parse_rational(json_rational_string(e[2], "edge weight")));
  }
  std::optional<Rational> cap;
  if (j.contains("cap")) cap = parse_rational(json_rational_string(j.at("cap"), "cap"));
  return build_network(std::move(g), j.at("basepoint").get<std::string>(), std::move(cap));
}

NetworkSpace parse_catalog(const json& j) {
  std::map<std::string, std::string> params;
  if (j.contains("params"))
    for (const auto& [key, value] : j.at("params").items())
      params[key] = json_rational_string(value, "param " + key);
  int level = j.contains("level") ? j.at("level").get<int>() : 1;
  return catalog_family(j.at("family").get<std::string>(), params, level);
}

}  // namespace

SpaceInput parse_space_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "metric") return parse_metric(j);
    if (kind == "network") return parse_network(j);
    if (kind == "catalog") return parse_catalog(j);
    throw ParseError("unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::optional<RawMetricInput> parse_metric_raw(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  try {
    if (j.at("kind").get<std::string>() != "metric") return std::nullopt;
    return parse_metric_fields(j);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string input_digest(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

ordered_json report_header(const std::string& digest) {
  ordered_json j;
  j["tool"] = "endscope";
  j["version"] = kToolVersion;
  j["input_digest"] = digest;
  return j;
}

ordered_json validation_to_json(const ValidationReport& report,
                                const std::vector<std::string>& ids) {
  ordered_json j;
  j["valid"] = report.valid();
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) violations.push_back(v.describe(ids));
  j["violations"] = std::move(violations);
  return j;
}

ordered_json rho_to_json(const RhoFunction& rho, const std::vector<std::string>& ids) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < ids.size(); ++i) j[ids[i]] = format_ext(rho.values[i]);
  return j;
}

ordered_json partition_to_json(const ComponentPartition& partition,
                               const std::vector<std::string>& node_names) {
  ordered_json classes = ordered_json::array();
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    ordered_json cls;
    cls["id"] = c;
    cls["compact"] = !partition.non_compact[c];
    ordered_json members = ordered_json::array();
    for (int node : partition.classes[c]) members.push_back(node_names[node]);
    cls["members"] = std::move(members);
    classes.push_back(std::move(cls));
  }
  ordered_json j;
  j["class_count"] = partition.classes.size();
  j["classes"] = std::move(classes);
  return j;
}

ordered_json ends_to_json(const EndsEstimate& estimate) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : estimate.rows) {
    ordered_json r;
    r["level"] = row.level;
    r["radius"] = format_rational(row.radius);
    r["escaping_components"] = row.escaping;
    rows.push_back(std::move(r));
  }
  ordered_json j;
  j["table"] = std::move(rows);
  j["stabilized"] = estimate.stabilized;
  j["verdict"] = estimate.verdict_string();
  return j;
}

ordered_json properness_to_json(const PropernessReport& report,
                                const NetworkSpace& space) {
  ordered_json classes = ordered_json::array();
  for (const auto& verdict : report.classes) {
    ordered_json v;
    v["class"] = verdict.cls;
    v["compact"] = !verdict.non_compact;
    v["proper"] = verdict.proper;
    if (verdict.witness) {
      ordered_json w;
      w["fixed_point"] = space.graph.id_of(verdict.witness->fixed_vertex);
      w["divergence_point"] = space.graph.id_of(verdict.witness->divergence_vertex);
      w["description"] = verdict.witness->description;
      v["witness"] = std::move(w);
    }
    classes.push_back(std::move(v));
  }
  ordered_json j;
  j["classes"] = std::move(classes);
  j["red_flag"] = report.red_flag;
  return j;
}

ordered_json structure_to_json(const StructureReport& report) {
  ordered_json j;
  j["applicable"] = report.applicable;
  j["gate"] = report.gate_rationale;
  j["ends"] = ends_to_json(report.ends);
  if (report.applicable) {
    j["class_count"] = report.class_count;
    j["non_compact_classes"] = report.non_compact_classes;
    j["compact_rest_vertices"] = report.compact_rest_vertices;
    j["group"] = report.group_description;
    if (report.properness_available) {
      ordered_json classes = ordered_json::array();
      for (const auto& verdict : report.properness.classes) {
        ordered_json v;
        v["class"] = verdict.cls;
        v["compact"] = !verdict.non_compact;
        v["proper"] = verdict.proper;
        if (verdict.witness) v["witness"] = verdict.witness->description;
        classes.push_back(std::move(v));
      }
      j["properness"] = std::move(classes);
    }
  }
  j["red_flags"] = report.red_flags;
  j["pass"] = report.pass();
  return j;
}

std::vector<std::string> point_names(const MetricSpace& space) {
  return space.point_ids;
}

std::vector<std::string> vertex_names(const NetworkSpace& space) {
  std::vector<std::string> names;
  for (int v = 0; v < space.graph.vertex_count(); ++v)
    names.push_back(space.graph.id_of(v));
  return names;
}

std::vector<std::string> component_names(const NetworkSpace& space) {
  std::vector<std::string> names;
  for (int c = 0; c < space.component_count; ++c) {
    int first = -1;
    for (int v = 0; v < space.graph.vertex_count() && first < 0; ++v)
      if (space.component_of[v] == c) first = v;
    names.push_back("component[" + std::to_string(c) + "] at " +
                    (first >= 0 ? space.graph.id_of(first) : "?"));
  }
  return names;
}

}  // namespace endscope

#include "endscope/dot.hpp"

#include <sstream>

namespace endscope {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string dot_export(const DistanceMatrix& d, const RhoFunction& rho,
                       const ProximityDigraph& digraph,
                       const ComponentPartition& partition,
                       const std::vector<std::string>& node_names) {
  std::ostringstream out;
  out << "digraph proximity {\n";
  out << "  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=" << quote("class " + std::to_string(c) +
                                 (partition.non_compact[c] ? " (non-compact)" : " (compact)"))
        << ";\n";
    for (int v : partition.classes[c])
      out << "    n" << v << " [label="
          << quote(node_names[v] + "\\nrho=" + format_ext(rho.values[v])) << "];\n";
    out << "  }\n";
  }
  for (int x = 0; x < digraph.node_count; ++x)
    for (int y : digraph.arcs[x])
      out << "  n" << x << " -> n" << y << " [label="
          << quote("d=" + format_ext(d.at(x, y))) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace endscope

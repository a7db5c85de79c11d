#include "endscope/theorem1.hpp"

#include "endscope/catalog.hpp"
#include "endscope/compactness.hpp"

namespace endscope {

StructureReport theorem1_check(const std::string& family,
                               const std::map<std::string, std::string>& params,
                               int level, const EndsSchedule& schedule) {
  StructureReport report;

  JSpaceVerdict gate = is_j_space(family, params, schedule);
  report.ends = gate.ends;
  if (gate.value != JSpaceVerdict::Value::Yes) {
    report.applicable = false;
    report.gate_rationale = "inapplicable: " + gate.rationale;
    return report;
  }
  report.applicable = true;
  report.gate_rationale = gate.rationale;

  NetworkSpace space = catalog_family(family, params, level);
  RhoFunction rho = rho_network(space);
  ComponentPartition partition = pseudo_components(space, rho);

  report.class_count = static_cast<int>(partition.classes.size());
  for (bool nc : partition.non_compact)
    if (nc) ++report.non_compact_classes;
  for (int cls = 0; cls < report.class_count; ++cls)
    if (!partition.non_compact[cls])
      report.compact_rest_vertices +=
          static_cast<long long>(class_vertices(space, partition, cls).size());

  if (report.non_compact_classes != 1)
    report.red_flags.push_back("expected exactly one non-compact class, found " +
                               std::to_string(report.non_compact_classes));

  try {
    SymbolicIsometryGroup group = symbolic_group(space);
    report.properness_available = true;
    report.group_description = group.describe();
    report.properness = properness_report(group, space, partition);
    if (report.properness.red_flag)
      report.red_flags.push_back("non-compact class is not proper");
  } catch (const std::invalid_argument& e) {
    report.properness_available = false;
    report.group_description = e.what();
  }
  return report;
}

}  // namespace endscope

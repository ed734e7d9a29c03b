#include "splicecert/json.hpp"

namespace splicecert {

nlohmann::json to_json(const Integer& value) {
  if (fits_json_number(value)) return value.convert_to<std::int64_t>();
  return to_string(value);
}

nlohmann::json to_json(const std::vector<Integer>& values) {
  auto out = nlohmann::json::array();
  for (const Integer& v : values) out.push_back(to_json(v));
  return out;
}

nlohmann::json report_json(const SpliceDiagram& d, const ValidationReport& report, const DiagramDocument* locations) {
  auto violations = nlohmann::json::array();
  for (const Violation& v : report.violations) {
    nlohmann::json item{{"kind", violation_kind_name(v.kind)}, {"message", v.message}};
    std::optional<SourceLocation> at;
    if (v.vertex) {
      item["vertex"] = d.name(*v.vertex);
      if (locations) {
        if (auto it = locations->vertex_locations.find(*v.vertex); it != locations->vertex_locations.end()) at = it->second;
      }
    }
    if (v.edge) {
      item["edge"] = d.edge_label(*v.edge);
      if (locations) {
        if (auto it = locations->edge_locations.find(*v.edge); it != locations->edge_locations.end()) at = it->second;
      }
    }
    if (at) {
      item["line"] = at->line;
      item["column"] = at->column;
    }
    violations.push_back(std::move(item));
  }
  return {{"valid", report.valid()}, {"violations", std::move(violations)}};
}

nlohmann::json certificate_json(const Certificate& certificate) {
  const SpliceDiagram& d = certificate.diagram;
  if (certificate.is_semigroup_failure()) {
    const auto& f = certificate.semigroup_failure();
    return {{"kind", "semigroup_condition_failure"},
            {"node", d.name(f.node)},
            {"edge", d.edge_label(f.edge)},
            {"weight", to_json(f.weight)},
            {"generators", to_json(f.generators)}};
  }
  const auto& o = certificate.delta_obstruction();
  return {{"kind", "delta_obstruction"},
          {"target", d.name(o.target)},
          {"mu", to_json(o.mu)},
          {"delta", to_json(o.delta)},
          {"generators", to_json(o.generators)}};
}

nlohmann::json linking_table_json(const SpliceDiagram& d, const LinkingTable& table) {
  auto entries = nlohmann::json::array();
  for (std::size_t i = 0; i < table.knots.size(); ++i) {
    for (std::size_t j = i + 1; j < table.knots.size(); ++j) {
      entries.push_back({{"a", d.name(table.knots[i])},
                         {"b", d.name(table.knots[j])},
                         {"value", to_json(table.at(table.knots[i], table.knots[j]))}});
    }
  }
  return entries;
}

nlohmann::json cabling_json(const SpliceDiagram& cabled, const CablingSpec& spec) {
  auto arms = nlohmann::json::array();
  for (const NewArm& arm : spec.new_arms) {
    nlohmann::json item{{"label", arm.label}, {"weight", to_json(arm.weight)}};
    item["arrow"] = arm.arrow ? nlohmann::json{{"multiplicity", arm.arrow->multiplicity}, {"colour", arm.arrow->colour}}
                              : nlohmann::json(nullptr);
    arms.push_back(std::move(item));
  }
  auto parameters = nlohmann::json::object();
  for (const auto& [key, value] : spec.parameters) parameters[key] = to_json(value);
  return {{"old_node", cabled.name(spec.old_node)},
          {"far_end", cabled.name(spec.far_end)},
          {"weight_toward_old_node", to_json(spec.weight_toward_old_node)},
          {"weight_toward_far_side", to_json(spec.weight_toward_far_side)},
          {"new_arms", std::move(arms)},
          {"parameters", std::move(parameters)}};
}

nlohmann::json witness_json(const WitnessResult& result) {
  return {{"case", case_tag_name(result.case_tag)},
          {"detail", result.detail},
          {"cabling", result.spec ? cabling_json(result.cabled_diagram, *result.spec) : nlohmann::json(nullptr)},
          {"second_cabling", result.second_spec ? cabling_json(result.cabled_diagram, *result.second_spec)
                                                : nlohmann::json(nullptr)},
          {"certificate", certificate_json(result.certificate)},
          {"diagram", serialize_diagram(result.cabled_diagram)},
          {"distinct_knots", distinct_knot_check(result)}};
}

std::string emit_json(const nlohmann::json& value) { return value.dump(); }

}  // namespace splicecert

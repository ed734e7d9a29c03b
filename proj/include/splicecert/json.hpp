#pragma once

#include "splicecert/diagram.hpp"
#include "splicecert/dsl.hpp"
#include "splicecert/invariants.hpp"
#include "splicecert/obstruction.hpp"
#include "splicecert/witness.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace splicecert {

/// Number when within 53 bits, decimal string otherwise.
nlohmann::json to_json(const Integer& value);
nlohmann::json to_json(const std::vector<Integer>& values);

/// {"valid": bool, "violations": [...]}; locations add line/column.
nlohmann::json report_json(const SpliceDiagram& d, const ValidationReport& report,
                           const DiagramDocument* locations = nullptr);

/// Tagged by "kind": "semigroup_condition_failure" or "delta_obstruction".
nlohmann::json certificate_json(const Certificate& certificate);

nlohmann::json linking_table_json(const SpliceDiagram& d, const LinkingTable& table);

nlohmann::json cabling_json(const SpliceDiagram& cabled, const CablingSpec& spec);

nlohmann::json witness_json(const WitnessResult& result);

/// Compact, keys sorted, no trailing newline.
std::string emit_json(const nlohmann::json& value);

}  // namespace splicecert

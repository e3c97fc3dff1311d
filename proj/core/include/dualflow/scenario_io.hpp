#pragma once

#include <string>

#include "dualflow/scenario.hpp"

namespace dualflow {

/// Parses the JSON scenario document. Sections: graph (explicit edges or a
/// generator spec), cost, objects, transactions, config. Throws ParseError
/// with the offending field or ValidationError for semantic problems.
Scenario parse_scenario_text(const std::string& text, const std::string& name = "");

Scenario load_scenario(const std::string& path);

/// Canonical serialization; parse(serialize(sc)) reproduces the scenario and
/// serialize is byte-stable across runs.
std::string serialize_scenario(const Scenario& sc);

void save_scenario(const Scenario& sc, const std::string& path);

}  // namespace dualflow

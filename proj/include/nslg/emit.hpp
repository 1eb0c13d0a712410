#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "nslg/scenario.hpp"

namespace nslg {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// Trace emission. The CSV column set and order are fixed:
// z_m,ct_m,sigma_m,rho_m,rho_st_m,rho_L_m,gouy_rad
void emit_csv(const ScenarioReport& r, std::ostream& out);

nlohmann::json report_to_json(const ScenarioReport& r);
ScenarioReport report_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const ScenarioConfig& c);
ScenarioConfig config_from_json(const nlohmann::json& j);

void emit_json(const ScenarioReport& r, std::ostream& out);

// format is "csv" or "json".
void emit(const ScenarioReport& r, const std::string& format, std::ostream& out);

} // namespace nslg

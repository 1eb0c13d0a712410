#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nslg/dynamics.hpp"
#include "nslg/free_space.hpp"

namespace nslg {

// Direct boundary values, bypassing the waist-propagation geometry, for
// setups characterized by measured width and slope at the field entrance.
struct BoundaryOverride {
    double sigma0_m = 0.0;
    double sigma0_rate = 0.0;
    bool operator==(const BoundaryOverride&) const = default;
};

struct ScenarioConfig {
    std::string name;
    double kinetic_eV = 0.0;
    double H_T = 0.0;
    double d_m = 0.0;       // waist-to-boundary distance
    double sigma_w_m = 0.0; // envelope waist
    int n = 0;
    int l = 0;
    double span_periods = 2.0;    // trace length in cyclotron periods
    int samples_per_period = 512; // trace sampling density
    std::optional<double> sigma_z_m;
    std::optional<BoundaryOverride> boundary_override;
    std::optional<double> alt_H_T; // also report the width ratio at this field
    bool operator==(const ScenarioConfig&) const = default;
};

void validate(const ScenarioConfig& c);

ScenarioConfig preset(const std::string& name);
std::vector<std::string> preset_names();

struct ScenarioDerived {
    double gamma = 0.0, beta = 0.0;
    double sigma_L_m = 0.0, omega_per_m = 0.0, cT_c_m = 0.0, T_c_s = 0.0;
    double hbar_omega_eV = 0.0;
    double c_tau_d_m = 0.0, tau_d_s = 0.0, z_R_m = 0.0;
    double rho_w_m = 0.0, rho_L_m = 0.0;
    double rho0_m = 0.0, drho_dz = 0.0, rho0_rate = 0.0;
    double sigma0_m = 0.0, sigma0_rate = 0.0;
    double xi1 = 0.0, xi2 = 0.0, xi2_alt = 0.0;
    double sigma_st_m = 0.0, rho_st_m = 0.0, rho_st_over_rho_L = 0.0;
    double mean_energy_eV = 0.0, landau_energy_eV = 0.0, energy_ratio = 0.0;
    std::optional<double> alt_ratio; // sigma_st / sigma_L at alt_H_T
    bool operator==(const ScenarioDerived&) const = default;
};

// In-field evolution sampled uniformly in ct; z = beta * ct past the
// boundary. The envelope phase integrates the exact width law on an
// internally refined grid, so trace density does not limit its accuracy.
struct ScenarioTrace {
    std::vector<double> z_m, ct_m, sigma_m, rho_m, gouy_rad;
    bool operator==(const ScenarioTrace&) const = default;
};

struct ScenarioReport {
    ScenarioConfig config;
    ScenarioDerived derived;
    ScenarioTrace trace;
    bool operator==(const ScenarioReport&) const = default;
};

ScenarioReport run_scenario(const ScenarioConfig& c);

// Comparison of computed source-geometry and boundary quantities against
// published reference values for the four instrument scenarios.
struct CellCheck {
    std::string scenario;
    std::string quantity;
    double computed = 0.0;
    double published = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

struct Table1Result {
    std::vector<ScenarioReport> reports;
    std::vector<CellCheck> cells;
    double tolerance = 0.0;
    int n_pass = 0;
    bool all_pass = false;
};

Table1Result table1(double tolerance = 0.015);

} // namespace nslg

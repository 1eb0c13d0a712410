#pragma once

#include <vector>

#include "nslg/constants.hpp"
#include "nslg/free_space.hpp"

namespace nslg {

// Independent check of the closed-form width laws by direct integration.
//
// The wavefront curvature radius R obeys 1/R = sigma'/sigma, and
// differentiating gives (sigma'/sigma)' + (sigma'/sigma)^2 = sigma''/sigma.
// Combining with the curvature evolution law
//   sigma''/sigma = lambda_C^2/sigma^4 - lambda_C^2/sigma_L^4
// yields the envelope equation integrated here:
//   sigma'' = lambda_C^2/sigma^3 - (omega/2)^2 sigma,   omega = 2 lambda_C/sigma_L^2,
// with primes denoting d/d(ct). Free space is the omega = 0 limit.
//
// The motion conserves
//   E = sigma'^2 + lambda_C^2/sigma^2 + (omega^2/4) sigma^2 = (omega^2/2) sigma_st^2.

struct EvolutionTrace {
    std::vector<double> ct_m;
    std::vector<double> sigma_m;
    std::vector<double> sigma_rate;
};

struct OdeOptions {
    // Starting number of RK4 substeps per output interval; 0 selects the
    // stiffness rule automatically. Step halving still applies on top.
    int forced_substeps = 0;
    int max_halvings = 10;
};

// Classical fixed-step RK4 over [0, span_ct_m], sampled at steps+1 uniform
// output points (steps >= 2). Substeps per output interval follow
//   omega*h <= min(2 pi / 1000, sqrt(2) / (400 * sigma_st^2/sigma_L^2)),
// which keeps roughly 400 substeps across the sharpest width bounce. If any
// RK4 stage reaches sigma <= 0 the whole integration restarts with doubled
// substeps, up to max_halvings times, then throws convergence_error.
EvolutionTrace integrate_optical_ode(double sigma0_m, double sigma0_rate,
                                     const FieldScales& scales, double span_ct_m,
                                     int steps, const OdeOptions& opt = {});

// Same integrator with omega = 0; the substep rule uses the diffraction
// scale of the trajectory's own waist, h <= c tau_d(waist) / 1000.
EvolutionTrace integrate_free_ode(double sigma0_m, double sigma0_rate,
                                  double span_ct_m, int steps,
                                  const OdeOptions& opt = {});

inline double optical_ode_energy(double sigma_m, double sigma_rate, double omega_per_m) {
    const double lc = constants::lambda_C_m;
    return sigma_rate * sigma_rate + lc * lc / (sigma_m * sigma_m) +
           0.25 * omega_per_m * omega_per_m * sigma_m * sigma_m;
}

} // namespace nslg

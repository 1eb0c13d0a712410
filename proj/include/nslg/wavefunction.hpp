#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "nslg/dynamics.hpp"
#include "nslg/grid.hpp"

namespace nslg {

// Instantaneous envelope data entering the transverse mode.
struct OpticalState {
    double sigma_m = 0.0;
    double sigma_rate = 0.0;
    double gouy_rad = 0.0; // accumulated envelope phase
};

// Transverse mode sampled on a polar grid, row-major over radial rings:
// a[j * n_phi + k] = psi(rho_j, phi_k). The mode is
//   N (rho^|l| / sigma^(|l|+1)) L_n^|l|(rho^2/sigma^2)
//     exp[i l phi - i gouy - rho^2/(2 sigma^2) + i rho^2 sigma' / (2 lambda_C sigma)],
// N = sqrt(n! / (pi (n+|l|)!)).
struct PsiSample {
    int n_r = 0;
    int n_phi = 0;
    std::vector<std::complex<double>> a;
};

// OpenMP-parallel evaluation and a serial reference. Both produce bitwise
// identical samples (rows are independent). Throws domain_error if the grid
// does not cover 8 sigma.
PsiSample psi_transverse(const TransverseGrid& g, const BeamSpec& b, const OpticalState& st);
PsiSample psi_transverse_serial(const TransverseGrid& g, const BeamSpec& b,
                                const OpticalState& st);

// Quadratures over a sampled mode. Parallel versions reduce per-ring
// partial sums in a fixed order, so they match the serial references
// bitwise. The moments are normalized by the sampled norm.
double grid_norm(const TransverseGrid& g, const PsiSample& psi);
double grid_norm_serial(const TransverseGrid& g, const PsiSample& psi);
double grid_mean_rho_sq(const TransverseGrid& g, const PsiSample& psi);
double grid_mean_rho_sq_serial(const TransverseGrid& g, const PsiSample& psi);

// Mean orbital angular momentum via the exact spectral azimuthal
// derivative (discrete Fourier transform over each ring), normalized.
double grid_mean_lz(const TransverseGrid& g, const PsiSample& psi);
double grid_mean_lz_serial(const TransverseGrid& g, const PsiSample& psi);

std::complex<double> grid_overlap(const TransverseGrid& g, const PsiSample& a,
                                  const PsiSample& b);

// Pointwise L2 distance between two sampled modes minimized over one
// global phase; the discriminating check that two evolution routes join
// smoothly at the boundary.
double continuity_mismatch(const TransverseGrid& g, const PsiSample& a,
                           const PsiSample& b);

// Width law driving the residual check. omega_per_m and inv_sigma_L2 are
// zero in free space.
struct DispersionLaw {
    double omega_per_m = 0.0;
    double inv_sigma_L2 = 0.0;
    std::function<double(double)> sigma;      // width at ct offset
    std::function<double(double)> sigma_rate;
    double energy_scale = 0.0; // |d phase/d(ct)| magnitude, 1/m, step control
};

DispersionLaw make_dispersion_law(const BeamSpec& b, const FieldSolutionParams& p,
                                  const FieldScales& scales);
DispersionLaw make_dispersion_law(const BeamSpec& b, const FreeDispersion& f,
                                  double at_dct_m);

struct ResidualOptions {
    double h_ct = 0.0;            // time stencil step; 0 selects the rule below
    double gouy_rate_scale = 1.0; // deliberate phase-rate corruption (self-test)
    bool richardson_checks = true;
};

struct ResidualReport {
    double residual = 0.0; // ||(i d/d(ct) - H) psi|| / ||H psi||
    double h_norm = 0.0;
    double time_estimate = 0.0;  // Richardson refinement estimates, relative
    double space_estimate = 0.0;
    double h_ct = 0.0;
    int n_r_used = 0;
};

// Evolution-equation residual at optical path dct past the boundary, using
// centered differences in time and five-point stencils in space.
//
// - Time step: h_ct = min(1e-6 * cT_c, 3e-5 / energy_scale); phase
//   increments between slices integrate the envelope-phase rate with a
//   three-point Simpson rule per half step.
// - The radial node count is raised above the grid's when the curvature
//   phase at the rim, rho_max^2 |sigma'| / (2 lambda_C sigma), needs it
//   (12 nodes per radian of rim phase).
// - Richardson checks compare against doubled steps: the time estimate
//   fires above half the residual, the space estimate above 1e-3; either
//   throws diagnostics_error unless disabled.
ResidualReport schrodinger_residual(const BeamSpec& b, const DispersionLaw& law,
                                    double dct_m, const TransverseGrid& g,
                                    const ResidualOptions& opt = {});

// Axial probability density of the moving packet: Gaussian of width
// sqrt(sigma_z^2 + (lambda_C ct / sigma_z)^2) centered at z0 + beta ct,
// normalized to unit integral over z.
struct LongitudinalPacket {
    double sigma_z_m = 0.0;
    double beta = 0.0;
    double z0_m = 0.0;
};

double longitudinal_width(const LongitudinalPacket& p, double ct_m);
double longitudinal_density(const LongitudinalPacket& p, double z_m, double ct_m);

} // namespace nslg

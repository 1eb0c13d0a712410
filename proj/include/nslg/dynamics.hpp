#pragma once

#include <span>
#include <vector>

#include "nslg/constants.hpp"
#include "nslg/free_space.hpp"

namespace nslg {

// Closed-form envelope evolution inside the field. The width obeys
//   sigma^2(D) = sigma_st^2 (1 + A sin(s*omega*D - theta)),
// evaluated internally in the cancellation-free form
//   sigma^2(D) = sigma_min^2 + 2 A sigma_st^2 sin^2(ph/2 + pi/4),
// ph = s*omega*D - theta, so that widths near the minimum keep full
// relative precision. D is the optical path ct since the boundary.
struct FieldSolutionParams {
    double sigma0_m = 0.0;     // boundary width (after snapping to sigma_L)
    double sigma0_rate = 0.0;  // boundary slope d sigma / d(ct)
    double sigma_L_m = 0.0;
    double omega_per_m = 0.0;
    double sigma_st_m = 0.0;   // stationary width
    double sigma_st2 = 0.0;
    double q = 0.0;            // (sigma_L / sigma_st)^4
    double amp = 0.0;          // sqrt(1 - q), oscillation amplitude of sigma^2
    double theta = 0.0;        // phase offset
    int s = 0;                 // oscillation direction: sign of sigma0_rate,
                               // or of sigma_L - sigma0 when the slope is zero
    double sigma_min2 = 0.0;   // sigma_st2 * q / (1 + amp)

    double phase(double dct_m) const { return s * omega_per_m * dct_m - theta; }

    double sigma_sq(double dct_m) const {
        const double half = 0.5 * phase(dct_m) + 0.25 * constants::pi;
        const double sn = std::sin(half);
        return sigma_min2 + 2.0 * amp * sigma_st2 * sn * sn;
    }
    double sigma(double dct_m) const { return std::sqrt(sigma_sq(dct_m)); }
    double sigma_rate(double dct_m) const {
        if (s == 0) return 0.0;
        return sigma_st2 * amp * s * omega_per_m * std::cos(phase(dct_m)) /
               (2.0 * sigma(dct_m));
    }
};

FieldSolutionParams field_solution_params(double sigma0_m, double sigma0_rate,
                                          const FieldScales& scales);

// r.m.s. radius corresponding to an envelope width sigma.
inline double rms_radius(double sigma_m, const BeamSpec& b) {
    return sigma_m * std::sqrt(static_cast<double>(principal_sum(b)));
}

inline double rho_L(const BeamSpec& b, const FieldScales& scales) {
    return scales.sigma_L_m * std::sqrt(static_cast<double>(principal_sum(b)));
}

inline double stationary_radius(const FieldSolutionParams& p, const BeamSpec& b) {
    return p.sigma_st_m * std::sqrt(static_cast<double>(principal_sum(b)));
}

// Mean squared radius from the boundary values alone (uncertainty-relation
// route): independent of the envelope closed form, used to cross-check it.
// Throws consistency_error if the supplied combination would give a
// negative squared radius.
double heisenberg_rms_sq(double rho0_m, double rho0_rate, double rho_st_m,
                         const FieldScales& scales, double dct_m);

// Mean transverse energy in the field and the corresponding stationary
// (Landau) level, both in eV.
struct TransverseEnergy {
    double mean_eV = 0.0;
    double landau_eV = 0.0;
    double ratio = 0.0;
};

TransverseEnergy mean_transverse_energy(const BeamSpec& b, const FieldSolutionParams& p,
                                        const FieldScales& scales);

// Dimensionless boundary-matching parameters. xi2 is normalized by the
// boundary width; xi2_alt is the rate-only convention, also in circulation.
struct XiDiagnostics {
    double xi1 = 0.0;      // sigma_L / sigma0
    double xi2 = 0.0;      // sigma0' sigma_L^2 / (lambda_C sigma0)
    double xi2_alt = 0.0;  // |sigma0'| sigma_L / lambda_C
};

XiDiagnostics xi_diagnostics(double sigma0_m, double sigma0_rate, const FieldScales& scales);

// Instantaneous rate d Phi_G / d(ct) of the accumulated envelope phase.
// inv_sigma_L2 is 1/sigma_L^2 inside the field and 0 in free space.
inline double gouy_rate(const BeamSpec& b, double sigma_m, double inv_sigma_L2) {
    return constants::lambda_C_m *
           (b.l * inv_sigma_L2 + principal_sum(b) / (sigma_m * sigma_m));
}

// Accumulated envelope phase along a uniformly sampled width trace,
// integrated with a cumulative composite Simpson rule. The ct grid must be
// uniform (relative tolerance 1e-9); the returned trace starts at zero.
std::vector<double> gouy_phase(const BeamSpec& b, std::span<const double> ct_m,
                               std::span<const double> sigma_m, double inv_sigma_L2);

// Envelope phase accumulated from the boundary to ct, integrating the
// closed-form width law with composite Simpson on substeps fine enough to
// resolve the sharpest width bounce.
double accumulated_gouy(const BeamSpec& b, const FieldSolutionParams& p,
                        const FieldScales& scales, double ct_m);

} // namespace nslg

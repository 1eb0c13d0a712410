#pragma once

#include <string>
#include <vector>

#include "nslg/constants.hpp"
#include "nslg/free_space.hpp"

namespace nslg {

// Checks that the packet crosses the boundary much faster than it spreads
// or cyclotron-rotates, so treating the crossing as instantaneous is safe.
struct TransferCheck {
    double tau_d_s = 0.0;     // diffraction time sigma_w^2 / (lambda_C c)
    double T_c_s = 0.0;       // cyclotron period
    double crossing_s = 0.0;  // sigma_z / (beta c)
    double ratio_tau = 0.0;   // tau_d / crossing
    double ratio_Tc = 0.0;    // T_c / crossing
    enum class Verdict { comfortable, marginal, violated } verdict =
        Verdict::violated;
};

TransferCheck transfer_time_check(const BeamSpec& b, const FieldScales& scales,
                                  double sigma_z_m, double beta);

std::string to_string(TransferCheck::Verdict v);

// Asymptotic suppression regime of the boundary-mismatch correction, from
// the dimensionless longitudinal offset zeta, crossing duration tau and
// spreading parameter Lambda. The regime index maps to the exponent of the
// suppression factor exp(exponent):
//   1: -zeta^2              (short crossing, slow spreading)
//   2: -zeta^2/(tau Lambda)^2   (short crossing, fast spreading)
//   3: -tau^2               (long crossing, slow spreading)
//   4: -1/Lambda^2          (long crossing, fast spreading)
// Near-ties (relative 1e-9) resolve to the smaller exponent magnitude.
struct SpaceRegime {
    int regime = 0;
    double exponent = 0.0;
};

SpaceRegime space_regime(double zeta, double tau, double Lambda);

// Measured axial field profile near the solenoid opening. h_ratio holds
// H_z(z)/H on a uniform z grid; d0 is the hard-edge length being compared
// against.
struct FringeProfile {
    std::vector<double> z_m;
    std::vector<double> h_ratio;
    double d0_m = 0.0;
};

FringeProfile load_fringe_profile(const std::string& csv_path, double d0_m);

// Effective magnetic length of the profile, Simpson integral of
// (H_z/H)^2, and the boundary shift (d - d0)/2 it implies.
struct EffectiveLength {
    double d_m = 0.0;
    double boundary_shift_m = 0.0;
};

EffectiveLength effective_length(const FringeProfile& p);

// Kinetic-energy change of an electron crossing the fringe at radius rho
// with initial azimuthal velocity vphi0 (units of c), for the two
// rotation senses. term1 is the diamagnetic gain, term2 the linear
// coupling; the branches are term1 -+ term2.
struct FringeEnergy {
    double term1_eV = 0.0;
    double term2_eV = 0.0;
    double dE_minus_eV = 0.0;
    double dE_plus_eV = 0.0;
    bool straddles_zero = false;
};

FringeEnergy fringe_energy_change(double rho_m, double H_T, double vphi0);

// Azimuthal velocity scales (units of c) of the in-field packet: the
// coherent-rotation value lambda_C sigma_st / sigma_L^2 and the
// energy-based bound sqrt(2 <E_perp> / m_e c^2).
struct VphiEstimate {
    double coherent = 0.0;
    double bound = 0.0;
};

VphiEstimate vphi_estimate(double sigma_st_m, const FieldScales& scales,
                           double mean_energy_eV);

} // namespace nslg

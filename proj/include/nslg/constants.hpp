#pragma once

#include <cmath>

#include "nslg/errors.hpp"

namespace nslg {

// CODATA 2018 values, SI units.
namespace constants {
inline constexpr double c_m_per_s  = 299792458.0;       // speed of light
inline constexpr double hbar_J_s   = 1.054571817e-34;   // reduced Planck constant
inline constexpr double e_charge_C = 1.602176634e-19;   // elementary charge
inline constexpr double m_e_kg     = 9.1093837015e-31;  // electron mass
inline constexpr double m_e_c2_eV  = 510998.95;         // electron rest energy
inline constexpr double lambda_C_m = 3.8615926796e-13;  // reduced Compton wavelength hbar/(m_e c)
inline constexpr double pi         = 3.141592653589793238462643383279502884;
} // namespace constants

struct Kinematics {
    double kinetic_eV = 0.0;
    double gamma = 1.0;
    double beta = 0.0; // v/c
};

inline Kinematics kinematics_from_kinetic_energy(double kinetic_eV) {
    if (!(kinetic_eV > 0.0))
        throw domain_error("kinematics: kinetic energy must be positive");
    const double gamma = 1.0 + kinetic_eV / constants::m_e_c2_eV;
    const double beta = std::sqrt(1.0 - 1.0 / (gamma * gamma));
    return {kinetic_eV, gamma, beta};
}

// Characteristic scales of a uniform longitudinal magnetic field of
// magnitude H_T (tesla). sigma_L is the magnetic length of the problem,
// omega_per_m the cyclotron frequency expressed per unit optical path
// (omega/c), and cT_c the spatial cyclotron period.
struct FieldScales {
    double H_T = 0.0;
    double sigma_L_m = 0.0;      // sqrt(2 hbar / (|e| H))
    double omega_per_m = 0.0;    // 2 lambda_C / sigma_L^2
    double cT_c_m = 0.0;         // 2 pi / omega_per_m
    double T_c_s = 0.0;          // cT_c / c
    double hbar_omega_eV = 0.0;  // hbar |e| H / m_e, expressed in eV
};

inline FieldScales field_scales(double H_T) {
    if (!(H_T > 0.0))
        throw domain_error("field_scales: field magnitude must be positive");
    namespace k = constants;
    FieldScales s;
    s.H_T = H_T;
    s.sigma_L_m = std::sqrt(2.0 * k::hbar_J_s / (k::e_charge_C * H_T));
    s.omega_per_m = 2.0 * k::lambda_C_m / (s.sigma_L_m * s.sigma_L_m);
    s.cT_c_m = 2.0 * k::pi / s.omega_per_m;
    s.T_c_s = s.cT_c_m / k::c_m_per_s;
    s.hbar_omega_eV = k::hbar_J_s * H_T / k::m_e_kg;
    return s;
}

// Diffraction scales of a free Gaussian envelope with waist sigma_w:
// tau_d is the diffraction (Rayleigh) time, z_R the Rayleigh range of a
// packet moving with speed beta*c.
struct DiffractionScales {
    double tau_d_s = 0.0;
    double c_tau_d_m = 0.0; // sigma_w^2 / lambda_C
    double z_R_m = 0.0;     // beta * c_tau_d
};

inline DiffractionScales diffraction_scales(double sigma_w_m, double beta) {
    if (!(sigma_w_m > 0.0))
        throw domain_error("diffraction_scales: waist must be positive");
    if (!(beta > 0.0 && beta < 1.0))
        throw domain_error("diffraction_scales: beta must lie in (0, 1)");
    DiffractionScales d;
    d.c_tau_d_m = sigma_w_m * sigma_w_m / constants::lambda_C_m;
    d.tau_d_s = d.c_tau_d_m / constants::c_m_per_s;
    d.z_R_m = beta * d.c_tau_d_m;
    return d;
}

} // namespace nslg

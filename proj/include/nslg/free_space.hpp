#pragma once

#include <cmath>
#include <cstdlib>

#include "nslg/constants.hpp"

namespace nslg {

// Quantum numbers and waist of a Laguerre-Gaussian packet. n is the radial
// index, l the (signed) orbital angular momentum, sigma_w the Gaussian
// envelope width at the waist.
struct BeamSpec {
    int n = 0;
    int l = 0;
    double sigma_w_m = 0.0;
};

inline void validate_beam(const BeamSpec& b) {
    if (b.n < 0)
        throw domain_error("beam: radial index must be nonnegative");
    if (std::abs(b.l) > 100)
        throw domain_error("beam: |l| above 100 is not supported");
    if (!(b.sigma_w_m > 0.0))
        throw domain_error("beam: waist must be positive");
}

// 2n + |l| + 1, the factor relating sigma^2 to the mean squared radius.
inline int principal_sum(const BeamSpec& b) { return 2 * b.n + std::abs(b.l) + 1; }

// r.m.s. radius at the waist.
inline double rho_w(const BeamSpec& b) {
    return b.sigma_w_m * std::sqrt(static_cast<double>(principal_sum(b)));
}

// Distance from the beam waist to the field boundary, along the axis.
struct SourceGeometry {
    double d_m = 0.0;
};

// r.m.s. radius of a freely spreading packet a time dt after its waist.
inline double free_rms_radius(const BeamSpec& b, double tau_d_s, double dt_s) {
    if (!(tau_d_s > 0.0))
        throw domain_error("free_rms_radius: diffraction time must be positive");
    const double u = dt_s / tau_d_s;
    return rho_w(b) * std::sqrt(1.0 + u * u);
}

// Slope d(rms radius)/dz of the free envelope at distance z past the waist.
inline double free_divergence(const BeamSpec& b, double z_R_m, double z_m) {
    if (!(z_R_m > 0.0))
        throw domain_error("free_divergence: Rayleigh range must be positive");
    const double r = z_m / z_R_m;
    return rho_w(b) * z_m / (z_R_m * z_R_m * std::sqrt(1.0 + r * r));
}

// Envelope values where the packet meets the field boundary. Rates are
// derivatives with respect to optical path ct.
struct BoundaryState {
    double rho0_m = 0.0;
    double drho_dz = 0.0;    // spatial slope of the r.m.s. radius
    double rho0_rate = 0.0;  // d rho / d(ct) = beta * drho_dz
    double sigma0_m = 0.0;   // rho0 / sqrt(2n+|l|+1)
    double sigma0_rate = 0.0;
};

inline BoundaryState boundary_state(const BeamSpec& b, const SourceGeometry& g,
                                    const Kinematics& kin) {
    validate_beam(b);
    if (g.d_m < 0.0)
        throw domain_error("boundary_state: waist-to-boundary distance must be nonnegative");
    const DiffractionScales ds = diffraction_scales(b.sigma_w_m, kin.beta);
    const double r = g.d_m / ds.z_R_m;
    const double root = std::sqrt(1.0 + r * r);
    BoundaryState s;
    s.rho0_m = rho_w(b) * root;
    s.drho_dz = rho_w(b) * g.d_m / (ds.z_R_m * ds.z_R_m * root);
    s.rho0_rate = kin.beta * s.drho_dz;
    const double f = std::sqrt(static_cast<double>(principal_sum(b)));
    s.sigma0_m = s.rho0_m / f;
    s.sigma0_rate = s.rho0_rate / f;
    return s;
}

// Free-space envelope law sigma(ct) for arbitrary initial width and slope.
// sigma^2 is exactly quadratic in the optical path:
//   sigma^2(D) = sigma0^2 + 2 sigma0 sigma0' D + (sigma0'^2 + lambda_C^2/sigma0^2) D^2.
struct FreeDispersion {
    double sigma0_m = 0.0;
    double sigma0_rate = 0.0;
    double quad = 0.0; // sigma0'^2 + lambda_C^2 / sigma0^2

    FreeDispersion() = default;
    FreeDispersion(double sigma0, double rate) : sigma0_m(sigma0), sigma0_rate(rate) {
        if (!(sigma0 > 0.0))
            throw domain_error("free dispersion: initial width must be positive");
        const double lc = constants::lambda_C_m;
        quad = rate * rate + lc * lc / (sigma0 * sigma0);
    }

    double sigma_sq(double dct_m) const {
        return sigma0_m * sigma0_m + 2.0 * sigma0_m * sigma0_rate * dct_m +
               quad * dct_m * dct_m;
    }
    double sigma(double dct_m) const { return std::sqrt(sigma_sq(dct_m)); }
    double sigma_rate(double dct_m) const {
        return (sigma0_m * sigma0_rate + quad * dct_m) / sigma(dct_m);
    }
    // Width and location of the waist of this trajectory.
    double waist_sigma() const { return constants::lambda_C_m / std::sqrt(quad); }
    double waist_dct() const { return -sigma0_m * sigma0_rate / quad; }
};

} // namespace nslg

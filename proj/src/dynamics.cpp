#include "nslg/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "nslg/grid.hpp"

namespace nslg {

FieldSolutionParams field_solution_params(double sigma0_m, double sigma0_rate,
                                          const FieldScales& scales) {
    if (!(sigma0_m > 0.0))
        throw domain_error("field solution: boundary width must be positive");
    const double lc = constants::lambda_C_m;
    const double sL = scales.sigma_L_m;

    FieldSolutionParams p;
    p.sigma_L_m = sL;
    p.omega_per_m = scales.omega_per_m;

    // A width within 1e-12 of sigma_L with zero slope is the stationary
    // state; snap it so the fixed point is exact in floating point.
    double s0 = sigma0_m;
    if (std::abs(s0 - sL) <= 1e-12 * sL) s0 = sL;
    p.sigma0_m = s0;
    p.sigma0_rate = sigma0_rate;

    // sigma_st^2 - sigma_L^2 = (sigma0^2 - sigma_L^2)^2 / (2 sigma0^2)
    //                          + (sigma0' sigma_L^2 / lambda_C)^2 / 2
    // is nonnegative term by term, so the oscillation amplitude keeps full
    // precision even within an ulp of the stationary width.
    const double d0 = s0 * s0 - sL * sL;
    const double xi_len = sigma0_rate * sL * sL / lc;
    const double excess = 0.5 * (d0 * d0 / (s0 * s0) + xi_len * xi_len);
    p.sigma_st2 = sL * sL + excess;
    p.sigma_st_m = std::sqrt(p.sigma_st2);
    const double qroot = sL * sL / p.sigma_st2;
    p.q = qroot * qroot;
    p.amp = std::sqrt(excess * (p.sigma_st2 + sL * sL)) / p.sigma_st2;
    p.sigma_min2 = p.sigma_st2 * p.q / (1.0 + p.amp);

    if (sigma0_rate != 0.0)
        p.s = sigma0_rate > 0.0 ? 1 : -1;
    else if (s0 != sL)
        p.s = sL > s0 ? 1 : -1;
    else
        p.s = 0;

    if (p.s == 0 || p.amp == 0.0) {
        p.theta = 0.0;
    } else if (sigma0_rate == 0.0) {
        // Width extremum at the boundary: the phase is exactly +-pi/2.
        p.theta = std::copysign(0.5 * constants::pi, sL - s0);
    } else {
        // amp sin(theta) = 1 - sigma0^2/sigma_st^2 and
        // amp cos(theta) = 2 sigma0 sigma0' / (s omega sigma_st^2), so theta
        // follows from atan2 of the two components, which stays accurate even
        // where an arcsin of the ratio would amplify rounding near +-pi/2.
        const double ys = p.sigma_st2 - s0 * s0;
        const double xc = s0 * std::abs(sigma0_rate) * sL * sL / lc;
        const double hyp = std::hypot(ys, xc) / p.sigma_st2;
        if (std::abs(hyp - p.amp) > 1e-12 * p.amp)
            throw consistency_error(
                "field solution: phase components disagree with the amplitude");
        p.theta = std::atan2(ys, xc);
    }
    return p;
}

double heisenberg_rms_sq(double rho0_m, double rho0_rate, double rho_st_m,
                         const FieldScales& scales, double dct_m) {
    const double om = scales.omega_per_m;
    const double st2 = rho_st_m * rho_st_m;
    const double ph = om * dct_m;
    const double val = st2 + (rho0_m * rho0_m - st2) * std::cos(ph) +
                       (2.0 * rho0_m * rho0_rate / om) * std::sin(ph);
    if (val < 0.0)
        throw consistency_error(
            "heisenberg_rms_sq: inputs give a negative squared radius; the "
            "stationary radius does not match the boundary values");
    return val;
}

TransverseEnergy mean_transverse_energy(const BeamSpec& b, const FieldSolutionParams& p,
                                        const FieldScales& scales) {
    const double sL2 = scales.sigma_L_m * scales.sigma_L_m;
    TransverseEnergy e;
    e.mean_eV = 0.5 * scales.hbar_omega_eV *
                (principal_sum(b) * p.sigma_st2 / sL2 + b.l);
    e.landau_eV = 0.5 * scales.hbar_omega_eV * (principal_sum(b) + b.l);
    e.ratio = e.mean_eV / e.landau_eV;
    return e;
}

XiDiagnostics xi_diagnostics(double sigma0_m, double sigma0_rate,
                             const FieldScales& scales) {
    if (!(sigma0_m > 0.0))
        throw domain_error("xi_diagnostics: boundary width must be positive");
    const double sL = scales.sigma_L_m;
    const double lc = constants::lambda_C_m;
    XiDiagnostics x;
    x.xi1 = sL / sigma0_m;
    x.xi2 = sigma0_rate * sL * sL / (lc * sigma0_m);
    x.xi2_alt = std::abs(sigma0_rate) * sL / lc;
    return x;
}

std::vector<double> gouy_phase(const BeamSpec& b, std::span<const double> ct_m,
                               std::span<const double> sigma_m, double inv_sigma_L2) {
    const std::size_t n = ct_m.size();
    if (n != sigma_m.size())
        throw domain_error("gouy_phase: trace arrays differ in length");
    if (n < 3)
        throw domain_error("gouy_phase: need at least three samples");
    const double h = ct_m[1] - ct_m[0];
    if (!(h > 0.0))
        throw domain_error("gouy_phase: ct grid must be increasing");
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (std::abs((ct_m[i + 1] - ct_m[i]) - h) > 1e-9 * h)
            throw domain_error("gouy_phase: ct grid must be uniform");

    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i)
        f[i] = gouy_rate(b, sigma_m[i], inv_sigma_L2);

    // Cumulative composite Simpson: even nodes by pairs of intervals, odd
    // nodes by the three-point half-panel rule (backward form at the end).
    std::vector<double> F(n, 0.0);
    for (std::size_t i = 2; i < n; i += 2)
        F[i] = F[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    for (std::size_t i = 1; i < n; i += 2) {
        if (i + 1 < n)
            F[i] = F[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
        else
            F[i] = F[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    }
    return F;
}

double accumulated_gouy(const BeamSpec& b, const FieldSolutionParams& p,
                        const FieldScales& scales, double ct_m) {
    if (ct_m == 0.0) return 0.0;
    const double inv_sL2 = 1.0 / (scales.sigma_L_m * scales.sigma_L_m);
    const double r2 = p.sigma_st2 * inv_sL2;
    const double h_rule = std::min(2.0 * constants::pi / 1000.0,
                                   std::sqrt(2.0) / (400.0 * r2)) /
                          scales.omega_per_m;
    const double span = std::abs(ct_m);
    const int sub = 2 * std::max(1, static_cast<int>(std::ceil(span / (2.0 * h_rule))));
    const double h = ct_m / sub; // signed, so negative ct integrates backward
    const std::vector<double> w = simpson_weights(sub + 1, h);
    double g = 0.0;
    for (int m = 0; m <= sub; ++m)
        g += w[m] * gouy_rate(b, p.sigma(m * h), inv_sL2);
    return g;
}

} // namespace nslg

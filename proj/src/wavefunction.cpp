#include "nslg/wavefunction.hpp"

#include <algorithm>
#include <cmath>

#include "nslg/laguerre.hpp"

namespace nslg {

namespace {

using cplx = std::complex<double>;

// Radial profile of the mode at one ring, including the curvature phase
// and the accumulated envelope phase. The azimuthal factor exp(i l phi)
// multiplies this value.
cplx radial_value(const BeamSpec& b, double log_norm, double sigma, double sigma_rate,
                  double gouy, double rho) {
    const int al = std::abs(b.l);
    const double x = (rho / sigma) * (rho / sigma);
    double mag;
    if (rho > 0.0)
        mag = std::exp(log_norm - 0.5 * x + al * std::log(rho / sigma) - std::log(sigma));
    else
        mag = al == 0 ? std::exp(log_norm - std::log(sigma)) : 0.0;
    const double amp = mag * laguerre(b.n, al, x);
    const double phase =
        rho * rho * sigma_rate / (2.0 * constants::lambda_C_m * sigma) - gouy;
    return {amp * std::cos(phase), amp * std::sin(phase)};
}

std::vector<cplx> azimuthal_factors(int n_phi, int l) {
    std::vector<cplx> az(n_phi);
    const double h = 2.0 * constants::pi / n_phi;
    for (int k = 0; k < n_phi; ++k) {
        const double p = l * (k * h);
        az[k] = {std::cos(p), std::sin(p)};
    }
    return az;
}

PsiSample sample_mode(const TransverseGrid& g, const BeamSpec& b, const OpticalState& st,
                      bool parallel) {
    validate_beam(b);
    if (!(st.sigma_m > 0.0))
        throw domain_error("psi: width must be positive");
    require_coverage(g, st.sigma_m);
    const double logN = laguerre_log_norm(b.n, std::abs(b.l));
    const std::vector<cplx> az = azimuthal_factors(g.n_phi, b.l);
    PsiSample psi;
    psi.n_r = g.n_r;
    psi.n_phi = g.n_phi;
    psi.a.resize(static_cast<std::size_t>(g.n_r) * g.n_phi);
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < g.n_r; ++j) {
        const cplx rad = radial_value(b, logN, st.sigma_m, st.sigma_rate, st.gouy_rad,
                                      g.rho_m[j]);
        cplx* row = psi.a.data() + static_cast<std::size_t>(j) * g.n_phi;
        for (int k = 0; k < g.n_phi; ++k) row[k] = rad * az[k];
    }
    return psi;
}

void check_shape(const TransverseGrid& g, const PsiSample& psi) {
    if (psi.n_r != g.n_r || psi.n_phi != g.n_phi)
        throw domain_error("grid quadrature: sample shape does not match the grid");
}

// Ring-indexed partial sums combined serially keep every reduction
// bitwise independent of the thread count.
template <typename F>
double ring_reduce(const TransverseGrid& g, bool parallel, F&& per_ring) {
    std::vector<double> partial(g.n_r);
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < g.n_r; ++j) partial[j] = per_ring(j);
    double total = 0.0;
    for (int j = 0; j < g.n_r; ++j) total += partial[j];
    return total;
}

double norm_impl(const TransverseGrid& g, const PsiSample& psi, bool parallel) {
    check_shape(g, psi);
    return ring_reduce(g, parallel, [&](int j) {
        const cplx* row = psi.a.data() + static_cast<std::size_t>(j) * g.n_phi;
        double s = 0.0;
        for (int k = 0; k < g.n_phi; ++k) s += std::norm(row[k]);
        return g.w_ring[j] * s;
    });
}

double mean_rho_sq_impl(const TransverseGrid& g, const PsiSample& psi, bool parallel) {
    const double n = norm_impl(g, psi, parallel);
    const double m = ring_reduce(g, parallel, [&](int j) {
        const cplx* row = psi.a.data() + static_cast<std::size_t>(j) * g.n_phi;
        double s = 0.0;
        for (int k = 0; k < g.n_phi; ++k) s += std::norm(row[k]);
        return g.w_ring[j] * g.rho_m[j] * g.rho_m[j] * s;
    });
    return m / n;
}

double mean_lz_impl(const TransverseGrid& g, const PsiSample& psi, bool parallel) {
    check_shape(g, psi);
    const int np = g.n_phi;
    std::vector<cplx> tw(np);
    for (int t = 0; t < np; ++t) {
        const double p = -2.0 * constants::pi * t / np;
        tw[t] = {std::cos(p), std::sin(p)};
    }
    const double num = ring_reduce(g, parallel, [&](int j) {
        const cplx* row = psi.a.data() + static_cast<std::size_t>(j) * np;
        double s = 0.0;
        for (int m = 0; m < np; ++m) {
            cplx c = 0.0;
            for (int k = 0; k < np; ++k) c += row[k] * tw[(m * k) % np];
            c /= static_cast<double>(np);
            const int mode = m <= np / 2 ? m : m - np;
            s += mode * std::norm(c);
        }
        return g.w_ring[j] * np * s;
    });
    const double den = norm_impl(g, psi, parallel);
    return num / den;
}

} // namespace

PsiSample psi_transverse(const TransverseGrid& g, const BeamSpec& b, const OpticalState& st) {
    return sample_mode(g, b, st, true);
}
PsiSample psi_transverse_serial(const TransverseGrid& g, const BeamSpec& b,
                                const OpticalState& st) {
    return sample_mode(g, b, st, false);
}

double grid_norm(const TransverseGrid& g, const PsiSample& psi) {
    return norm_impl(g, psi, true);
}
double grid_norm_serial(const TransverseGrid& g, const PsiSample& psi) {
    return norm_impl(g, psi, false);
}
double grid_mean_rho_sq(const TransverseGrid& g, const PsiSample& psi) {
    return mean_rho_sq_impl(g, psi, true);
}
double grid_mean_rho_sq_serial(const TransverseGrid& g, const PsiSample& psi) {
    return mean_rho_sq_impl(g, psi, false);
}
double grid_mean_lz(const TransverseGrid& g, const PsiSample& psi) {
    return mean_lz_impl(g, psi, true);
}
double grid_mean_lz_serial(const TransverseGrid& g, const PsiSample& psi) {
    return mean_lz_impl(g, psi, false);
}

std::complex<double> grid_overlap(const TransverseGrid& g, const PsiSample& a,
                                  const PsiSample& b) {
    check_shape(g, a);
    check_shape(g, b);
    std::vector<cplx> partial(g.n_r);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < g.n_r; ++j) {
        const cplx* ra = a.a.data() + static_cast<std::size_t>(j) * g.n_phi;
        const cplx* rb = b.a.data() + static_cast<std::size_t>(j) * g.n_phi;
        cplx s = 0.0;
        for (int k = 0; k < g.n_phi; ++k) s += std::conj(ra[k]) * rb[k];
        partial[j] = g.w_ring[j] * s;
    }
    cplx total = 0.0;
    for (int j = 0; j < g.n_r; ++j) total += partial[j];
    return total;
}

double continuity_mismatch(const TransverseGrid& g, const PsiSample& a,
                           const PsiSample& b) {
    const cplx S = grid_overlap(g, a, b);
    const double mag = std::abs(S);
    const cplx e = mag > 0.0 ? std::conj(S) / mag : cplx{1.0, 0.0};
    std::vector<double> partial(g.n_r);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < g.n_r; ++j) {
        const cplx* ra = a.a.data() + static_cast<std::size_t>(j) * g.n_phi;
        const cplx* rb = b.a.data() + static_cast<std::size_t>(j) * g.n_phi;
        double s = 0.0;
        for (int k = 0; k < g.n_phi; ++k) s += std::norm(ra[k] - e * rb[k]);
        partial[j] = g.w_ring[j] * s;
    }
    double total = 0.0;
    for (int j = 0; j < g.n_r; ++j) total += partial[j];
    return std::sqrt(total);
}

DispersionLaw make_dispersion_law(const BeamSpec& b, const FieldSolutionParams& p,
                                  const FieldScales& scales) {
    DispersionLaw law;
    law.omega_per_m = scales.omega_per_m;
    law.inv_sigma_L2 = 1.0 / (scales.sigma_L_m * scales.sigma_L_m);
    law.sigma = [p](double d) { return p.sigma(d); };
    law.sigma_rate = [p](double d) { return p.sigma_rate(d); };
    law.energy_scale = 0.5 * scales.omega_per_m *
                       (principal_sum(b) * p.sigma_st2 * law.inv_sigma_L2 +
                        std::abs(b.l));
    return law;
}

DispersionLaw make_dispersion_law(const BeamSpec& b, const FreeDispersion& f,
                                  double at_dct_m) {
    DispersionLaw law;
    law.sigma = [f](double d) { return f.sigma(d); };
    law.sigma_rate = [f](double d) { return f.sigma_rate(d); };
    const double s = f.sigma(at_dct_m);
    const double sr = f.sigma_rate(at_dct_m);
    const double lc = constants::lambda_C_m;
    law.energy_scale =
        lc * principal_sum(b) / (s * s) + 2.0 * principal_sum(b) * sr * sr / lc;
    return law;
}

namespace {

/// Azimuthal five-point stencil constants for the single mode exp(i l phi):
// the first derivative is i*c1*psi and the second derivative c2*psi.
struct AzStencil {
    double c1;
    double c2;
};

AzStencil az_stencil(int l, double h_phi) {
    const double lh = l * h_phi;
    AzStencil s;
    s.c1 = (16.0 * std::sin(lh) - 2.0 * std::sin(2.0 * lh)) / (12.0 * h_phi);
    s.c2 = (-30.0 + 32.0 * std::cos(lh) - 2.0 * std::cos(2.0 * lh)) /
           (12.0 * h_phi * h_phi);
    return s;
}

} // namespace

ResidualReport schrodinger_residual(const BeamSpec& b, const DispersionLaw& law,
                                    double dct_m, const TransverseGrid& g,
                                    const ResidualOptions& opt) {
    validate_beam(b);
    const double lc = constants::lambda_C_m;
    const double sigma_t = law.sigma(dct_m);
    require_coverage(g, sigma_t);

    double h = opt.h_ct;
    if (!(h > 0.0)) {
        h = 3e-5 / law.energy_scale;
        if (law.omega_per_m > 0.0)
            h = std::min(h, 1e-6 * 2.0 * constants::pi / law.omega_per_m);
    }

    // Envelope-phase increments between time slices, one three-point
    // Simpson panel per half step; the rate scale is the corruption knob.
    const auto grate = [&](double d) {
        return gouy_rate(b, law.sigma(d), law.inv_sigma_L2) * opt.gouy_rate_scale;
    };
    const auto panel = [&](double from, double to) {
        return (to - from) / 6.0 *
               (grate(from) + 4.0 * grate(0.5 * (from + to)) + grate(to));
    };
    const double offsets[5] = {-2.0 * h, -h, 0.0, h, 2.0 * h};
    double gouy[5];
    gouy[2] = 0.0;
    gouy[3] = panel(dct_m, dct_m + h);
    gouy[4] = gouy[3] + panel(dct_m + h, dct_m + 2.0 * h);
    gouy[1] = panel(dct_m, dct_m - h);
    gouy[0] = gouy[1] + panel(dct_m - h, dct_m - 2.0 * h);

    // Radial resolution: at least 12 nodes per radian of curvature phase
    // at the rim.
    const double rim_phase = g.rho_max_m * g.rho_max_m *
                             std::abs(law.sigma_rate(dct_m)) / (2.0 * lc * sigma_t);
    const int n_r = std::max(g.n_r, static_cast<int>(std::ceil(12.0 * rim_phase)));
    const double h_r = g.rho_max_m / (n_r - 1);
    const std::vector<double> w_r = simpson_weights(n_r, h_r);

    const double logN = laguerre_log_norm(b.n, std::abs(b.l));
    std::vector<std::vector<cplx>> rad(5, std::vector<cplx>(n_r));
    for (int s = 0; s < 5; ++s) {
        const double d = dct_m + offsets[s];
        const double sg = law.sigma(d);
        const double sr = law.sigma_rate(d);
        const double gy = gouy[s];
        std::vector<cplx>& out = rad[s];
#pragma omp parallel for schedule(static)
        for (int j = 0; j < n_r; ++j)
            out[j] = radial_value(b, logN, sg, sr, gy, j * h_r);
    }
    const std::vector<cplx>& rt = rad[2];

    const AzStencil a1 = az_stencil(b.l, g.h_phi);
    const AzStencil a2 = az_stencil(b.l, 2.0 * g.h_phi); // doubled spacing
    const double om = law.omega_per_m;
    const double pot = om * om / (8.0 * lc);

    const auto h_apply = [&](int j, int stride, const AzStencil& az) {
        const double rho = j * h_r;
        const double hh = stride * h_r;
        const cplx d2 = (-rt[j - 2 * stride] + 16.0 * rt[j - stride] - 30.0 * rt[j] +
                         16.0 * rt[j + stride] - rt[j + 2 * stride]) /
                        (12.0 * hh * hh);
        const cplx d1 = (rt[j - 2 * stride] - 8.0 * rt[j - stride] +
                         8.0 * rt[j + stride] - rt[j + 2 * stride]) /
                        (12.0 * hh);
        const cplx lap = d2 + d1 / rho + az.c2 * rt[j] / (rho * rho);
        return -0.5 * lc * lap + 0.5 * om * az.c1 * rt[j] + pot * rho * rho * rt[j];
    };

    double res2 = 0.0, hn2 = 0.0, tdiff2 = 0.0, sdiff2 = 0.0;
    std::vector<cplx> h1(n_r);
    for (int j = 2; j <= n_r - 3; ++j) {
        const double w = 2.0 * constants::pi * w_r[j] * (j * h_r);
        h1[j] = h_apply(j, 1, a1);
        const cplx dh = (rad[3][j] - rad[1][j]) / (2.0 * h);
        const cplx d2h = (rad[4][j] - rad[0][j]) / (4.0 * h);
        res2 += w * std::norm(cplx{0.0, 1.0} * dh - h1[j]);
        hn2 += w * std::norm(h1[j]);
        tdiff2 += w * std::norm(dh - d2h);
    }
    for (int j = 4; j <= n_r - 5; ++j) {
        const double w = 2.0 * constants::pi * w_r[j] * (j * h_r);
        sdiff2 += w * std::norm(h1[j] - h_apply(j, 2, a2));
    }

    ResidualReport r;
    r.h_norm = std::sqrt(hn2);
    r.residual = std::sqrt(res2) / r.h_norm;
    r.time_estimate = std::sqrt(tdiff2) / (3.0 * r.h_norm);
    r.space_estimate = std::sqrt(sdiff2) / (15.0 * r.h_norm);
    r.h_ct = h;
    r.n_r_used = n_r;
    if (opt.richardson_checks) {
        if (r.time_estimate > 0.5 * r.residual)
            throw diagnostics_error(
                "residual: time-step refinement estimate dominates; reduce h_ct");
        if (r.space_estimate > 1e-3)
            throw diagnostics_error(
                "residual: grid refinement estimate too large; refine the grid");
    }
    return r;
}

double longitudinal_width(const LongitudinalPacket& p, double ct_m) {
    if (!(p.sigma_z_m > 0.0))
        throw domain_error("longitudinal: width must be positive");
    const double spread = constants::lambda_C_m * ct_m / p.sigma_z_m;
    return std::sqrt(p.sigma_z_m * p.sigma_z_m + spread * spread);
}

double longitudinal_density(const LongitudinalPacket& p, double z_m, double ct_m) {
    if (!(p.beta > 0.0 && p.beta < 1.0))
        throw domain_error("longitudinal: beta must lie in (0, 1)");
    const double w = longitudinal_width(p, ct_m);
    const double u = (z_m - p.z0_m - p.beta * ct_m) / w;
    return std::exp(-u * u) / (w * std::sqrt(constants::pi));
}

} // namespace nslg

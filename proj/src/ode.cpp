#include "nslg/ode.hpp"

#include <algorithm>
#include <cmath>

#include "nslg/dynamics.hpp"

namespace nslg {

namespace {

struct Rhs {
    double lc2;       // lambda_C^2
    double om_sq_4;   // omega^2 / 4
    double accel(double sigma) const { return lc2 / (sigma * sigma * sigma) - om_sq_4 * sigma; }
};

// One RK4 step; returns false if any stage width is nonpositive.
bool rk4_step(const Rhs& rhs, double h, double& sigma, double& rate) {
    const double s1 = sigma;
    if (!(s1 > 0.0)) return false;
    const double k1s = rate, k1r = rhs.accel(s1);
    const double s2 = sigma + 0.5 * h * k1s;
    if (!(s2 > 0.0)) return false;
    const double k2s = rate + 0.5 * h * k1r, k2r = rhs.accel(s2);
    const double s3 = sigma + 0.5 * h * k2s;
    if (!(s3 > 0.0)) return false;
    const double k3s = rate + 0.5 * h * k2r, k3r = rhs.accel(s3);
    const double s4 = sigma + h * k3s;
    if (!(s4 > 0.0)) return false;
    const double k4s = rate + h * k3r, k4r = rhs.accel(s4);
    sigma += h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
    rate += h / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
    return sigma > 0.0;
}

EvolutionTrace integrate(double sigma0, double rate0, double omega, double h_rule,
                         double span, int steps, const OdeOptions& opt) {
    if (!(sigma0 > 0.0))
        throw domain_error("ode: initial width must be positive");
    if (!(span > 0.0))
        throw domain_error("ode: span must be positive");
    if (steps < 2)
        throw domain_error("ode: need at least two output steps");

    const Rhs rhs{constants::lambda_C_m * constants::lambda_C_m,
                  0.25 * omega * omega};
    const double h_out = span / steps;
    int substeps = opt.forced_substeps > 0
                       ? opt.forced_substeps
                       : std::max(1, static_cast<int>(std::ceil(h_out / h_rule)));

    for (int attempt = 0; attempt <= opt.max_halvings; ++attempt, substeps *= 2) {
        EvolutionTrace tr;
        tr.ct_m.resize(steps + 1);
        tr.sigma_m.resize(steps + 1);
        tr.sigma_rate.resize(steps + 1);
        double sigma = sigma0, rate = rate0;
        tr.ct_m[0] = 0.0;
        tr.sigma_m[0] = sigma;
        tr.sigma_rate[0] = rate;
        const double h = h_out / substeps;
        bool ok = true;
        for (int i = 0; ok && i < steps; ++i) {
            for (int m = 0; m < substeps; ++m)
                if (!rk4_step(rhs, h, sigma, rate)) { ok = false; break; }
            tr.ct_m[i + 1] = (i + 1) * h_out;
            tr.sigma_m[i + 1] = sigma;
            tr.sigma_rate[i + 1] = rate;
        }
        if (ok) return tr;
    }
    throw convergence_error("ode: width hit zero even after all step halvings");
}

} // namespace

EvolutionTrace integrate_optical_ode(double sigma0_m, double sigma0_rate,
                                     const FieldScales& scales, double span_ct_m,
                                     int steps, const OdeOptions& opt) {
    const FieldSolutionParams p = field_solution_params(sigma0_m, sigma0_rate, scales);
    const double r2 = p.sigma_st2 / (scales.sigma_L_m * scales.sigma_L_m);
    const double om_h = std::min(2.0 * constants::pi / 1000.0,
                                 std::sqrt(2.0) / (400.0 * r2));
    return integrate(p.sigma0_m, sigma0_rate, scales.omega_per_m,
                     om_h / scales.omega_per_m, span_ct_m, steps, opt);
}

EvolutionTrace integrate_free_ode(double sigma0_m, double sigma0_rate,
                                  double span_ct_m, int steps, const OdeOptions& opt) {
    const FreeDispersion fd(sigma0_m, sigma0_rate);
    const double w = fd.waist_sigma();
    const double h_rule = w * w / constants::lambda_C_m / 1000.0;
    return integrate(sigma0_m, sigma0_rate, 0.0, h_rule, span_ct_m, steps, opt);
}

} // namespace nslg

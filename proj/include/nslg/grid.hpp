#pragma once

#include <vector>

#include "nslg/free_space.hpp"

namespace nslg {

// Polar quadrature grid: n_r uniform radial nodes starting at rho = 0 with
// composite Simpson line weights (three-eighths block at the outer end when
// the interval count is odd), and n_phi equally spaced azimuthal nodes with
// periodic trapezoid weights. w_ring[j] = w_r[j] * rho[j] * (2 pi / n_phi)
// is the full quadrature weight of every node on ring j.
struct TransverseGrid {
    int n_r = 0;
    int n_phi = 0;
    double rho_max_m = 0.0;
    double h_r = 0.0;
    double h_phi = 0.0;
    std::vector<double> rho_m;
    std::vector<double> w_r;
    std::vector<double> w_ring;
};

// Composite Simpson weights for n_points uniform samples with spacing h;
// uses a trailing three-eighths block when the interval count is odd.
// Requires at least 3 points (4 when the count is odd).
std::vector<double> simpson_weights(int n_points, double h);

TransverseGrid make_grid(int n_r, int n_phi, double rho_max_m);

// Outer radius that keeps truncation error at or below the grid floor for a
// packet of width sigma: sigma * max(8, 5 + sqrt(4n + 2|l| + 2)).
double suggested_rho_max(double sigma_m, const BeamSpec& b);

TransverseGrid grid_for_state(const BeamSpec& b, double sigma_m, int n_r, int n_phi);

// Throws domain_error unless rho_max >= 8 sigma.
void require_coverage(const TransverseGrid& g, double sigma_m);

} // namespace nslg

#include "nslg/grid.hpp"

#include <algorithm>
#include <cmath>

namespace nslg {

std::vector<double> simpson_weights(int n_points, double h) {
    if (n_points < 3)
        throw domain_error("simpson_weights: need at least three samples");
    const int intervals = n_points - 1;
    if (intervals % 2 != 0 && intervals < 3)
        throw domain_error("simpson_weights: cannot place a three-eighths block");
    std::vector<double> w(n_points, 0.0);
    const int simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
    for (int k = 0; k + 2 <= simpson_end; k += 2) {
        w[k] += h / 3.0;
        w[k + 1] += 4.0 * h / 3.0;
        w[k + 2] += h / 3.0;
    }
    if (intervals % 2 != 0) {
        const int a = simpson_end;
        w[a] += 3.0 * h / 8.0;
        w[a + 1] += 9.0 * h / 8.0;
        w[a + 2] += 9.0 * h / 8.0;
        w[a + 3] += 3.0 * h / 8.0;
    }
    return w;
}

TransverseGrid make_grid(int n_r, int n_phi, double rho_max_m) {
    if (n_r < 256)
        throw domain_error("grid: need at least 256 radial nodes");
    if (n_phi < 16)
        throw domain_error("grid: need at least 16 azimuthal nodes");
    if (!(rho_max_m > 0.0))
        throw domain_error("grid: outer radius must be positive");
    TransverseGrid g;
    g.n_r = n_r;
    g.n_phi = n_phi;
    g.rho_max_m = rho_max_m;
    g.h_r = rho_max_m / (n_r - 1);
    g.h_phi = 2.0 * constants::pi / n_phi;
    g.rho_m.resize(n_r);
    for (int j = 0; j < n_r; ++j) g.rho_m[j] = j * g.h_r;
    g.w_r = simpson_weights(n_r, g.h_r);
    g.w_ring.resize(n_r);
    for (int j = 0; j < n_r; ++j) g.w_ring[j] = g.w_r[j] * g.rho_m[j] * g.h_phi;
    return g;
}

double suggested_rho_max(double sigma_m, const BeamSpec& b) {
    const double tail = 5.0 + std::sqrt(4.0 * b.n + 2.0 * std::abs(b.l) + 2.0);
    return sigma_m * std::max(8.0, tail);
}

TransverseGrid grid_for_state(const BeamSpec& b, double sigma_m, int n_r, int n_phi) {
    if (!(sigma_m > 0.0))
        throw domain_error("grid: width must be positive");
    return make_grid(n_r, n_phi, suggested_rho_max(sigma_m, b));
}

void require_coverage(const TransverseGrid& g, double sigma_m) {
    if (g.rho_max_m < 8.0 * sigma_m)
        throw domain_error("grid: outer radius below 8 sigma cannot hold the state");
}

} // namespace nslg

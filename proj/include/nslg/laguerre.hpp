#pragma once

#include <cmath>

namespace nslg {

// Generalized Laguerre polynomial L_n^alpha(x) by the stable upward
// recurrence k L_k = (2k - 1 + alpha - x) L_{k-1} - (k - 1 + alpha) L_{k-2}.
inline double laguerre(int n, double alpha, double x) {
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0 + alpha - x) * cur - (k - 1.0 + alpha) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

// log of the radial normalization sqrt(n! / (pi (n+|l|)!)).
inline double laguerre_log_norm(int n, int abs_l) {
    return 0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + abs_l + 1.0) -
                  std::log(3.141592653589793238462643383279502884));
}

} // namespace nslg

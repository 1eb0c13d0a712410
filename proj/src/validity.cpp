#include "nslg/validity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nslg/grid.hpp"

namespace nslg {

TransferCheck transfer_time_check(const BeamSpec& b, const FieldScales& scales,
                                  double sigma_z_m, double beta) {
    validate_beam(b);
    if (!(sigma_z_m > 0.0))
        throw domain_error("transfer check: longitudinal width must be positive");
    if (!(beta > 0.0 && beta < 1.0))
        throw domain_error("transfer check: beta must lie in (0, 1)");
    namespace k = constants;
    TransferCheck c;
    c.tau_d_s = b.sigma_w_m * b.sigma_w_m / (k::lambda_C_m * k::c_m_per_s);
    c.T_c_s = scales.T_c_s;
    c.crossing_s = sigma_z_m / (beta * k::c_m_per_s);
    c.ratio_tau = c.tau_d_s / c.crossing_s;
    c.ratio_Tc = c.T_c_s / c.crossing_s;
    const double worst = std::min(c.ratio_tau, c.ratio_Tc);
    c.verdict = worst >= 100.0  ? TransferCheck::Verdict::comfortable
                : worst >= 10.0 ? TransferCheck::Verdict::marginal
                                : TransferCheck::Verdict::violated;
    return c;
}

std::string to_string(TransferCheck::Verdict v) {
    switch (v) {
    case TransferCheck::Verdict::comfortable: return "comfortable";
    case TransferCheck::Verdict::marginal: return "marginal";
    default: return "violated";
    }
}

SpaceRegime space_regime(double zeta, double tau, double Lambda) {
    if (!(tau > 0.0) || !(Lambda > 0.0) || !(zeta > 0.0))
        throw domain_error("space_regime: parameters must be positive");
    const auto exponent = [&](int regime) {
        switch (regime) {
        case 1: return -zeta * zeta;
        case 2: return -zeta * zeta / (tau * Lambda * tau * Lambda);
        case 3: return -tau * tau;
        default: return -1.0 / (Lambda * Lambda);
        }
    };
    const double tl = tau * Lambda;
    const bool tie_tz = std::abs(tau - zeta) <= 1e-9 * std::max({tau, zeta, 1.0});
    const bool tie_tl = std::abs(tl - 1.0) <= 1e-9;

    std::vector<int> candidates;
    for (const bool long_crossing : tie_tz ? std::vector<bool>{false, true}
                                           : std::vector<bool>{tau > zeta})
        for (const bool fast_spread : tie_tl ? std::vector<bool>{false, true}
                                             : std::vector<bool>{tl > 1.0})
            candidates.push_back(1 + (fast_spread ? 1 : 0) + (long_crossing ? 2 : 0));

    SpaceRegime best{candidates.front(), exponent(candidates.front())};
    for (const int r : candidates)
        if (std::abs(exponent(r)) < std::abs(best.exponent))
            best = {r, exponent(r)};
    return best;
}

FringeProfile load_fringe_profile(const std::string& csv_path, double d0_m) {
    std::ifstream in(csv_path);
    if (!in)
        throw domain_error("fringe profile: cannot open " + csv_path);
    FringeProfile p;
    p.d0_m = d0_m;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1 && line.find_first_not_of("0123456789+-.eE, \t\r") !=
                               std::string::npos)
            continue; // header row
        std::istringstream row(line);
        std::string zs, hs;
        if (!std::getline(row, zs, ',') || !std::getline(row, hs, ','))
            throw domain_error("fringe profile: malformed row " + std::to_string(lineno));
        try {
            p.z_m.push_back(std::stod(zs));
            p.h_ratio.push_back(std::stod(hs));
        } catch (const std::exception&) {
            throw domain_error("fringe profile: non-numeric row " + std::to_string(lineno));
        }
    }
    if (p.z_m.size() >= 2) {
        const double h = p.z_m[1] - p.z_m[0];
        if (!(h > 0.0))
            throw domain_error("fringe profile: z grid must be increasing");
        for (std::size_t i = 1; i + 1 < p.z_m.size(); ++i)
            if (std::abs((p.z_m[i + 1] - p.z_m[i]) - h) > 1e-9 * h)
                throw domain_error("fringe profile: z grid must be uniform");
        if (std::abs(p.h_ratio.front()) > 1e-3 || std::abs(p.h_ratio.back()) > 1e-3)
            std::cerr << "fringe profile: warning: endpoints do not reach zero field\n";
    }
    return p;
}

EffectiveLength effective_length(const FringeProfile& p) {
    if (p.z_m.size() < 3)
        throw domain_error("effective_length: need at least three samples");
    const double h = p.z_m[1] - p.z_m[0];
    const std::vector<double> w = simpson_weights(static_cast<int>(p.z_m.size()), h);
    EffectiveLength e;
    for (std::size_t i = 0; i < p.z_m.size(); ++i)
        e.d_m += w[i] * p.h_ratio[i] * p.h_ratio[i];
    e.boundary_shift_m = 0.5 * (e.d_m - p.d0_m);
    return e;
}

FringeEnergy fringe_energy_change(double rho_m, double H_T, double vphi0) {
    if (!(rho_m > 0.0) || !(H_T > 0.0))
        throw domain_error("fringe energy: radius and field must be positive");
    namespace k = constants;
    FringeEnergy f;
    const double e_rho_H = k::e_charge_C * rho_m * H_T;
    f.term1_eV = e_rho_H * e_rho_H / (8.0 * k::m_e_kg) / k::e_charge_C;
    f.term2_eV = rho_m * H_T * vphi0 * k::c_m_per_s / 2.0;
    f.dE_minus_eV = f.term1_eV - f.term2_eV;
    f.dE_plus_eV = f.term1_eV + f.term2_eV;
    f.straddles_zero = f.dE_minus_eV < 0.0 && f.dE_plus_eV > 0.0;
    return f;
}

VphiEstimate vphi_estimate(double sigma_st_m, const FieldScales& scales,
                           double mean_energy_eV) {
    if (!(sigma_st_m > 0.0))
        throw domain_error("vphi estimate: stationary width must be positive");
    if (!(mean_energy_eV > 0.0))
        throw domain_error("vphi estimate: mean energy must be positive");
    VphiEstimate v;
    v.coherent = constants::lambda_C_m * sigma_st_m /
                 (scales.sigma_L_m * scales.sigma_L_m);
    v.bound = std::sqrt(2.0 * mean_energy_eV / constants::m_e_c2_eV);
    return v;
}

} // namespace nslg

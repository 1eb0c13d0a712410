#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nslg/emit.hpp"
#include "nslg/ode.hpp"
#include "nslg/scenario.hpp"
#include "nslg/validity.hpp"
#include "nslg/wavefunction.hpp"

namespace {

void print_derived(const nslg::ScenarioReport& rep) {
    const nslg::ScenarioDerived& d = rep.derived;
    std::printf("scenario %s: E=%g eV  H=%g T  d=%g m  sigma_w=%g m  n=%d l=%d\n",
                rep.config.name.c_str(), rep.config.kinetic_eV, rep.config.H_T,
                rep.config.d_m, rep.config.sigma_w_m, rep.config.n, rep.config.l);
    std::printf("  beta                 %.9g\n", d.beta);
    std::printf("  sigma_L              %.9g m\n", d.sigma_L_m);
    std::printf("  T_c                  %.9g s\n", d.T_c_s);
    std::printf("  tau_d                %.9g s\n", d.tau_d_s);
    std::printf("  z_R                  %.9g m\n", d.z_R_m);
    std::printf("  rho_L                %.9g m\n", d.rho_L_m);
    std::printf("  rho_0                %.9g m\n", d.rho0_m);
    std::printf("  drho/dz              %.9g\n", d.drho_dz);
    std::printf("  sigma_0              %.9g m\n", d.sigma0_m);
    std::printf("  sigma_0'             %.9g\n", d.sigma0_rate);
    std::printf("  xi_1                 %.9g\n", d.xi1);
    std::printf("  xi_2                 %.9g   (alt %.9g)\n", d.xi2, d.xi2_alt);
    std::printf("  sigma_st             %.9g m\n", d.sigma_st_m);
    std::printf("  rho_st               %.9g m\n", d.rho_st_m);
    std::printf("  rho_st / rho_L       %.9g\n", d.rho_st_over_rho_L);
    std::printf("  <E_perp>             %.9g eV\n", d.mean_energy_eV);
    std::printf("  Landau level         %.9g eV\n", d.landau_energy_eV);
    std::printf("  <E_perp> / level     %.9g\n", d.energy_ratio);
    if (d.alt_ratio)
        std::printf("  sigma_st/sigma_L at H=%g T: %.9g  <- flagged: same boundary "
                    "state, alternative field\n",
                    *rep.config.alt_H_T, *d.alt_ratio);
    std::printf("  trace: %zu samples over %g periods\n", rep.trace.ct_m.size(),
                rep.config.span_periods);
}

int cmd_table1() {
    const nslg::Table1Result r = nslg::table1();
    std::printf("%-10s %-8s %13s %13s %9s  %s\n", "scenario", "quantity", "computed",
                "published", "rel.err", "verdict");
    for (const nslg::CellCheck& c : r.cells)
        std::printf("%-10s %-8s %13.6e %13.6e %8.3f%%  %s\n", c.scenario.c_str(),
                    c.quantity.c_str(), c.computed, c.published, 100.0 * c.rel_err,
                    c.pass ? "ok" : "MISS");
    std::printf("%d/%zu cells within %.1f%% of the published reference values\n",
                r.n_pass, r.cells.size(), 100.0 * r.tolerance);
    return r.all_pass ? 0 : 1;
}

int cmd_run(const std::optional<std::string>& config_path,
            const std::optional<std::string>& preset_name,
            const std::optional<double>& span, const std::optional<int>& samples,
            const std::optional<std::string>& out, const std::string& format) {
    nslg::ScenarioConfig cfg;
    if (config_path) {
        std::ifstream in(*config_path);
        if (!in) throw nslg::domain_error("run: cannot open " + *config_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw nslg::domain_error(std::string{"run: bad JSON: "} + e.what());
        }
        cfg = nslg::config_from_json(j);
    } else if (preset_name) {
        cfg = nslg::preset(*preset_name);
    } else {
        throw nslg::domain_error("run: need --config or --preset");
    }
    if (span) cfg.span_periods = *span;
    if (samples) cfg.samples_per_period = *samples;
    const nslg::ScenarioReport rep = nslg::run_scenario(cfg);
    if (out) {
        std::ofstream os(*out);
        if (!os) throw nslg::domain_error("run: cannot write " + *out);
        nslg::emit(rep, format, os);
        print_derived(rep);
        std::printf("trace written to %s (%s)\n", out->c_str(), format.c_str());
    } else {
        nslg::emit(rep, format, std::cout);
    }
    return 0;
}

int cmd_validate(const std::string& preset_name, const std::optional<double>& sigma_z) {
    const nslg::ScenarioConfig cfg = nslg::preset(preset_name);
    double sz;
    if (sigma_z)
        sz = *sigma_z;
    else if (cfg.sigma_z_m)
        sz = *cfg.sigma_z_m;
    else
        throw nslg::domain_error("validate: preset has no longitudinal width; pass --sigma-z");
    const nslg::Kinematics kin = nslg::kinematics_from_kinetic_energy(cfg.kinetic_eV);
    const nslg::FieldScales scales = nslg::field_scales(cfg.H_T);
    const nslg::BeamSpec beam{cfg.n, cfg.l, cfg.sigma_w_m};
    const nslg::TransferCheck c = nslg::transfer_time_check(beam, scales, sz, kin.beta);
    std::printf("boundary-crossing check for %s (sigma_z=%g m, beta=%.6g)\n",
                preset_name.c_str(), sz, kin.beta);
    std::printf("  diffraction time tau_d   %.6e s\n", c.tau_d_s);
    std::printf("  cyclotron period T_c     %.6e s\n", c.T_c_s);
    std::printf("  crossing time            %.6e s\n", c.crossing_s);
    std::printf("  tau_d / crossing         %.6e\n", c.ratio_tau);
    std::printf("  T_c / crossing           %.6e\n", c.ratio_Tc);
    std::printf("  verdict: %s (instantaneous-crossing treatment %s)\n",
                nslg::to_string(c.verdict).c_str(),
                c.verdict == nslg::TransferCheck::Verdict::violated ? "NOT safe"
                                                                    : "safe");
    return 0;
}

int cmd_fringe(const std::string& profile, double rho, double vphi, double d0,
               double H) {
    const nslg::FringeProfile p = nslg::load_fringe_profile(profile, d0);
    const nslg::EffectiveLength e = nslg::effective_length(p);
    const nslg::FringeEnergy f = nslg::fringe_energy_change(rho, H, vphi);
    std::printf("fringe profile %s: %zu samples\n", profile.c_str(), p.z_m.size());
    std::printf("  effective length d       %.6e m (hard-edge d0 %.6e m)\n", e.d_m,
                p.d0_m);
    std::printf("  boundary shift (d-d0)/2  %.6e m\n", e.boundary_shift_m);
    std::printf("energy change at rho=%g m, H=%g T, vphi0=%g:\n", rho, H, vphi);
    std::printf("  diamagnetic term         %+.6e eV\n", f.term1_eV);
    std::printf("  coupling term            %+.6e eV\n", f.term2_eV);
    std::printf("  counter-rotating branch  %+.6e eV\n", f.dE_minus_eV);
    std::printf("  co-rotating branch       %+.6e eV\n", f.dE_plus_eV);
    std::printf("  branches straddle zero: %s\n", f.straddles_zero ? "yes" : "no");
    return 0;
}

int cmd_psi(const std::string& preset_name, double ct, const std::string& grid_spec,
            const std::optional<std::string>& out) {
    int n_r = 0, n_phi = 0;
    if (std::sscanf(grid_spec.c_str(), "%d,%d", &n_r, &n_phi) != 2)
        throw nslg::domain_error("psi: --grid expects NR,NPHI");
    const nslg::ScenarioConfig cfg = nslg::preset(preset_name);
    const nslg::Kinematics kin = nslg::kinematics_from_kinetic_energy(cfg.kinetic_eV);
    const nslg::FieldScales scales = nslg::field_scales(cfg.H_T);
    const nslg::BeamSpec beam{cfg.n, cfg.l, cfg.sigma_w_m};
    double sigma0 = 0.0, sigma0_rate = 0.0;
    if (cfg.boundary_override) {
        sigma0 = cfg.boundary_override->sigma0_m;
        sigma0_rate = cfg.boundary_override->sigma0_rate;
    } else {
        const nslg::BoundaryState bs =
            nslg::boundary_state(beam, nslg::SourceGeometry{cfg.d_m}, kin);
        sigma0 = bs.sigma0_m;
        sigma0_rate = bs.sigma0_rate;
    }
    const nslg::FieldSolutionParams p =
        nslg::field_solution_params(sigma0, sigma0_rate, scales);
    const nslg::OpticalState st{p.sigma(ct), p.sigma_rate(ct),
                                nslg::accumulated_gouy(beam, p, scales, ct)};
    const nslg::TransverseGrid g = nslg::grid_for_state(beam, st.sigma_m, n_r, n_phi);
    const nslg::PsiSample psi = nslg::psi_transverse(g, beam, st);
    const double norm = nslg::grid_norm(g, psi);
    const double rho2 = nslg::grid_mean_rho_sq(g, psi);
    const double lz = nslg::grid_mean_lz(g, psi);
    const nslg::DispersionLaw law = nslg::make_dispersion_law(beam, p, scales);
    const nslg::ResidualReport res = nslg::schrodinger_residual(beam, law, ct, g);
    nlohmann::json j{{"preset", preset_name},
                     {"ct_m", ct},
                     {"sigma_m", st.sigma_m},
                     {"sigma_rate", st.sigma_rate},
                     {"gouy_rad", st.gouy_rad},
                     {"grid", {{"n_r", g.n_r}, {"n_phi", g.n_phi},
                               {"rho_max_m", g.rho_max_m}}},
                     {"norm", norm},
                     {"mean_rho_sq_m2", rho2},
                     {"mean_rho_sq_expected_m2",
                      nslg::principal_sum(beam) * st.sigma_m * st.sigma_m},
                     {"mean_lz", lz},
                     {"residual", res.residual},
                     {"residual_h_ct_m", res.h_ct},
                     {"residual_n_r", res.n_r_used}};
    std::cout << j.dump(2) << '\n';
    if (out) {
        std::ofstream os(*out);
        if (!os) throw nslg::domain_error("psi: cannot write " + *out);
        os << "rho_m,phi_rad,re,im\n";
        for (int jr = 0; jr < g.n_r; ++jr)
            for (int k = 0; k < g.n_phi; ++k) {
                const std::complex<double> v = psi.a[static_cast<std::size_t>(jr) * g.n_phi + k];
                os << nslg::format_double(g.rho_m[jr]) << ','
                   << nslg::format_double(k * g.h_phi) << ','
                   << nslg::format_double(v.real()) << ','
                   << nslg::format_double(v.imag()) << '\n';
            }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vortex-electron packet crossing into a solenoid: envelope "
                 "dynamics, energies and validity checks"};
    app.require_subcommand(1);

    app.add_subcommand("table1", "compare the four instrument scenarios against "
                                 "published reference values");

    auto* run = app.add_subcommand("run", "evaluate one scenario and emit its trace");
    std::optional<std::string> run_config, run_preset, run_out;
    std::optional<double> run_span;
    std::optional<int> run_samples;
    std::string run_format = "csv";
    run->add_option("--config", run_config, "scenario config JSON file");
    run->add_option("--preset", run_preset, "preset name");
    run->add_option("--span", run_span, "trace length, cyclotron periods");
    run->add_option("--samples-per-period", run_samples, "trace sampling density");
    run->add_option("--out", run_out, "output path (default: stdout)");
    run->add_option("--format", run_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* val = app.add_subcommand("validate", "boundary-crossing time check");
    std::string val_preset;
    std::optional<double> val_sigma_z;
    val->add_option("--preset", val_preset, "preset name")->required();
    val->add_option("--sigma-z", val_sigma_z, "longitudinal width, m");

    auto* fr = app.add_subcommand("fringe", "effective length and energy change "
                                            "for a measured fringe profile");
    std::string fr_profile;
    double fr_rho = 0.0, fr_vphi = 0.0, fr_d0 = 0.0, fr_H = 1.0;
    fr->add_option("--profile", fr_profile, "CSV with z,H_z/H columns")->required();
    fr->add_option("--rho", fr_rho, "electron radius, m")->required();
    fr->add_option("--vphi", fr_vphi, "initial azimuthal velocity, units of c")
        ->required();
    fr->add_option("--d0", fr_d0, "hard-edge length to compare against, m");
    fr->add_option("--field", fr_H, "plateau field, T (default 1)");

    auto* ps = app.add_subcommand("psi", "sample the transverse mode and check it");
    std::string ps_preset, ps_grid = "512,128";
    double ps_ct = 0.0;
    std::optional<std::string> ps_out;
    ps->add_option("--preset", ps_preset, "preset name")->required();
    ps->add_option("--ct", ps_ct, "optical path past the boundary, m")->required();
    ps->add_option("--grid", ps_grid, "radial,azimuthal node counts (default 512,128)");
    ps->add_option("--out", ps_out, "write node values as CSV");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("table1")) return cmd_table1();
        if (app.got_subcommand("run"))
            return cmd_run(run_config, run_preset, run_span, run_samples, run_out,
                           run_format);
        if (app.got_subcommand("validate")) return cmd_validate(val_preset, val_sigma_z);
        if (app.got_subcommand("fringe"))
            return cmd_fringe(fr_profile, fr_rho, fr_vphi, fr_d0, fr_H);
        if (app.got_subcommand("psi")) return cmd_psi(ps_preset, ps_ct, ps_grid, ps_out);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const nslg::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nslg::diagnostics_error& e) {
        std::cerr << "diagnostics error: " << e.what() << '\n';
        return 2;
    } catch (const nslg::convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << '\n';
        return 2;
    } catch (const nslg::consistency_error& e) {
        std::cerr << "internal consistency error: " << e.what() << '\n';
        return 2;
    }
}

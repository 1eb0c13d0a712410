#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "nslg/emit.hpp"
#include "nslg/ode.hpp"
#include "nslg/scenario.hpp"

using namespace nslg;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("presets exist, validate, and carry the intended inputs") {
    const std::vector<std::string> names = preset_names();
    CHECK(names.size() == 6);
    for (const auto& n : names) {
        const ScenarioConfig c = preset(n);
        CHECK(c.name == n);
        CHECK_NOTHROW(validate(c));
    }
    const ScenarioConfig sem = preset("sem");
    CHECK(sem.kinetic_eV == 1e3);
    CHECK(sem.H_T == 1.0);
    CHECK(sem.d_m == 0.163);
    CHECK(sem.sigma_w_m == 1e-6);
    CHECK(sem.l == 3);
    CHECK(sem.sigma_z_m.has_value());
    const ScenarioConfig sch = preset("schattschneider");
    CHECK(sch.boundary_override.has_value());
    CHECK(sch.alt_H_T.has_value());
    CHECK_THROWS_AS(preset("nope"), domain_error);
}

TEST_CASE("config validation rejects out-of-range settings") {
    ScenarioConfig c = preset("sem");
    c.span_periods = 0.5;
    CHECK_THROWS_AS(validate(c), domain_error);
    c = preset("sem");
    c.samples_per_period = 32;
    CHECK_THROWS_AS(validate(c), domain_error);
    c = preset("sem");
    c.kinetic_eV = 0.0;
    CHECK_THROWS_AS(validate(c), domain_error);
    c = preset("sem");
    c.H_T = -1.0;
    CHECK_THROWS_AS(validate(c), domain_error);
}

TEST_CASE("microscope scenario: derived quantities") {
    const ScenarioReport r = run_scenario(preset("sem"));
    const ScenarioDerived& d = r.derived;
    CHECK(rel(d.beta, 0.06246953896074883) < 1e-12);
    CHECK(rel(d.sigma_L_m, 3.628255659535605e-08) < 1e-12);
    CHECK(rel(d.T_c_s, 3.572386750697578e-11) < 1e-12);
    CHECK(rel(d.tau_d_s, 8.637992737046105e-09) < 1e-12);
    CHECK(rel(d.z_R_m, 0.1617714351147457) < 1e-12);
    CHECK(rel(d.rho_L_m, 7.25651131907121e-08) < 1e-12);
    CHECK(rel(d.rho0_m, 2.8391876114847116e-06) < 1e-12);
    CHECK(rel(d.drho_dz, 8.775054609960264e-06) < 1e-12);
    CHECK(rel(d.sigma0_m, 1.4195938057423558e-06) < 1e-12);
    CHECK(rel(d.sigma0_rate, 2.740868079198057e-07) < 1e-12);
    CHECK(rel(d.xi1, 0.025558407234936208) < 1e-12);
    CHECK(rel(d.xi2, 0.0006581931187513418) < 1e-12);
    CHECK(rel(d.sigma_st_m, 1.0038048381717395e-06) < 1e-12);
    CHECK(rel(d.rho_st_m, 2.007609676343479e-06) < 1e-12);
    CHECK(rel(d.rho_st_over_rho_L, 27.666320468172866) < 1e-12);
    CHECK(rel(d.mean_energy_eV, 0.17739660384154549) < 1e-12);
    CHECK(rel(d.landau_energy_eV, 0.0004051867261769004) < 1e-12);
    CHECK(rel(d.energy_ratio, 437.8144504272234) < 1e-12);
    CHECK(!d.alt_ratio.has_value());
}

TEST_CASE("trace shape and boundary values") {
    ScenarioConfig c = preset("sem");
    c.span_periods = 1.5;
    c.samples_per_period = 128;
    const ScenarioReport r = run_scenario(c);
    const std::size_t want = static_cast<std::size_t>(1.5 * 128) + 1;
    REQUIRE(r.trace.ct_m.size() == want);
    CHECK(r.trace.z_m.size() == want);
    CHECK(r.trace.sigma_m.size() == want);
    CHECK(r.trace.rho_m.size() == want);
    CHECK(r.trace.gouy_rad.size() == want);
    CHECK(r.trace.ct_m.front() == 0.0);
    CHECK(rel(r.trace.ct_m.back(), 1.5 * r.derived.cT_c_m) < 1e-12);
    CHECK(rel(r.trace.sigma_m.front(), r.derived.sigma0_m) < 1e-12);
    CHECK(rel(r.trace.rho_m.front(), r.derived.rho0_m) < 1e-12);
    CHECK(r.trace.gouy_rad.front() == 0.0);
    for (std::size_t i = 1; i < want; ++i) {
        CHECK(r.trace.gouy_rad[i] > r.trace.gouy_rad[i - 1]);
        CHECK(rel(r.trace.z_m[i], r.derived.beta * r.trace.ct_m[i]) < 1e-12);
        CHECK(rel(r.trace.rho_m[i], 2.0 * r.trace.sigma_m[i]) < 1e-12);
    }
}

TEST_CASE("stationary preset: flat width and linear envelope phase") {
    const ScenarioReport r = run_scenario(preset("landau"));
    const double sL = r.derived.sigma_L_m;
    CHECK(r.derived.sigma0_m == sL);
    const double slope = constants::lambda_C_m *
                         (2.0 * r.config.n + std::abs(r.config.l) + r.config.l + 1.0) /
                         (sL * sL);
    CHECK(rel(slope, 2053.3772205370806) < 1e-12);
    for (std::size_t i = 0; i < r.trace.ct_m.size(); ++i) {
        CHECK(std::abs(r.trace.sigma_m[i] - sL) < 1e-10 * sL);
        if (i > 0)
            CHECK(rel(r.trace.gouy_rad[i], slope * r.trace.ct_m[i]) < 1e-9);
    }
}

TEST_CASE("trace envelope phase matches an independent integration") {
    ScenarioConfig c = preset("sem");
    c.span_periods = 1.0;
    c.samples_per_period = 256;
    const ScenarioReport r = run_scenario(c);
    // integrate the width ODE densely and apply the trace-based phase rule
    const FieldScales scales = field_scales(c.H_T);
    const int steps = 1 << 15;
    const EvolutionTrace tr =
        integrate_optical_ode(r.derived.sigma0_m, r.derived.sigma0_rate, scales,
                              r.derived.cT_c_m, steps);
    const BeamSpec b{c.n, c.l, c.sigma_w_m};
    const std::vector<double> g =
        gouy_phase(b, tr.ct_m, tr.sigma_m,
                   1.0 / (scales.sigma_L_m * scales.sigma_L_m));
    CHECK(rel(r.trace.gouy_rad.back(), g.back()) < 1e-6);
}

TEST_CASE("measured-input preset reports both candidate fields") {
    const ScenarioReport r = run_scenario(preset("schattschneider"));
    CHECK(rel(r.derived.sigma_st_m / r.derived.sigma_L_m, 20.623757703867124) <
          1e-12);
    REQUIRE(r.derived.alt_ratio.has_value());
    CHECK(rel(*r.derived.alt_ratio, 15.001665291503015) < 1e-12);
    CHECK(rel(r.derived.xi1, 0.7606405994833554) < 1e-12);
}

TEST_CASE("comparison against published reference values") {
    const auto t0 = std::chrono::steady_clock::now();
    const Table1Result t = table1();
    const auto dt = std::chrono::steady_clock::now() - t0;
    CHECK(std::chrono::duration<double>(dt).count() < 1.0);

    REQUIRE(t.cells.size() == 24);
    CHECK(t.tolerance == 0.015);
    CHECK(t.n_pass == 19);
    CHECK(!t.all_pass);
    double worst = 0.0;
    for (const CellCheck& c : t.cells) {
        worst = std::max(worst, c.rel_err);
        const bool expected_fail =
            c.quantity == "xi_2" || (c.quantity == "xi_1" && c.scenario == "sem");
        CHECK(c.pass == !expected_fail);
    }
    CHECK(worst < 0.0196);
}

TEST_CASE("CSV emission: fixed header and round-trip exact values") {
    ScenarioConfig c = preset("sem");
    c.span_periods = 1.0;
    c.samples_per_period = 64;
    const ScenarioReport r = run_scenario(c);
    std::ostringstream out;
    emit_csv(r, out);
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "z_m,ct_m,sigma_m,rho_m,rho_st_m,rho_L_m,gouy_rad");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        double vals[7];
        for (double& v : vals) {
            REQUIRE(std::getline(cells, cell, ','));
            const auto res =
                std::from_chars(cell.data(), cell.data() + cell.size(), v);
            REQUIRE(res.ec == std::errc());
        }
        CHECK(vals[0] == r.trace.z_m[rows]);
        CHECK(vals[1] == r.trace.ct_m[rows]);
        CHECK(vals[2] == r.trace.sigma_m[rows]);
        CHECK(vals[3] == r.trace.rho_m[rows]);
        CHECK(vals[4] == r.derived.rho_st_m);
        CHECK(vals[5] == r.derived.rho_L_m);
        CHECK(vals[6] == r.trace.gouy_rad[rows]);
        ++rows;
    }
    CHECK(rows == r.trace.ct_m.size());
}

TEST_CASE("JSON emission round-trips bit for bit") {
    ScenarioConfig c = preset("schattschneider");
    c.span_periods = 1.0;
    c.samples_per_period = 64;
    const ScenarioReport r = run_scenario(c);
    const nlohmann::json j = report_to_json(r);
    const ScenarioReport back = report_from_json(j);
    CHECK(back == r);

    std::ostringstream out1;
    emit_json(r, out1);
    const ScenarioReport parsed =
        report_from_json(nlohmann::json::parse(out1.str()));
    std::ostringstream out2;
    emit_json(parsed, out2);
    CHECK(out1.str() == out2.str());

    const ScenarioConfig c2 = config_from_json(config_to_json(c));
    CHECK(c2 == c);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse("{\"name\":3}")),
                    domain_error);
}

TEST_CASE("shortest-round-trip double formatting") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.5) == "1.5");
    const double v = 3.628255659535605e-08;
    double back = 0.0;
    const std::string s = format_double(v);
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
}

TEST_CASE("emit dispatch accepts only known formats") {
    ScenarioConfig c = preset("landau");
    c.samples_per_period = 64;
    c.span_periods = 1.0;
    const ScenarioReport r = run_scenario(c);
    std::ostringstream out;
    CHECK_NOTHROW(emit(r, "csv", out));
    CHECK_NOTHROW(emit(r, "json", out));
    CHECK_THROWS_AS(emit(r, "yaml", out), domain_error);
}

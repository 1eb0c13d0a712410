#include "nslg/emit.hpp"

#include <charconv>
#include <ostream>

#include <nlohmann/json.hpp>

#include "nslg/errors.hpp"

namespace nslg {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void emit_csv(const ScenarioReport& r, std::ostream& out) {
    out << "z_m,ct_m,sigma_m,rho_m,rho_st_m,rho_L_m,gouy_rad\n";
    const std::string rho_st = format_double(r.derived.rho_st_m);
    const std::string rho_L = format_double(r.derived.rho_L_m);
    for (std::size_t i = 0; i < r.trace.ct_m.size(); ++i) {
        out << format_double(r.trace.z_m[i]) << ',' << format_double(r.trace.ct_m[i])
            << ',' << format_double(r.trace.sigma_m[i]) << ','
            << format_double(r.trace.rho_m[i]) << ',' << rho_st << ',' << rho_L << ','
            << format_double(r.trace.gouy_rad[i]) << '\n';
    }
}

json config_to_json(const ScenarioConfig& c) {
    json j{{"name", c.name},
           {"kinetic_eV", c.kinetic_eV},
           {"H_T", c.H_T},
           {"d_m", c.d_m},
           {"sigma_w_m", c.sigma_w_m},
           {"n", c.n},
           {"l", c.l},
           {"span_periods", c.span_periods},
           {"samples_per_period", c.samples_per_period}};
    if (c.sigma_z_m) j["sigma_z_m"] = *c.sigma_z_m;
    if (c.boundary_override)
        j["boundary_override"] = {{"sigma0_m", c.boundary_override->sigma0_m},
                                  {"sigma0_rate", c.boundary_override->sigma0_rate}};
    if (c.alt_H_T) j["alt_H_T"] = *c.alt_H_T;
    return j;
}

ScenarioConfig config_from_json(const json& j) {
    if (!j.is_object())
        throw domain_error("config: expected a JSON object");
    ScenarioConfig c;
    try {
        c.name = j.value("name", std::string{});
        c.kinetic_eV = j.at("kinetic_eV").get<double>();
        c.H_T = j.at("H_T").get<double>();
        c.d_m = j.value("d_m", 0.0);
        c.sigma_w_m = j.at("sigma_w_m").get<double>();
        c.n = j.value("n", 0);
        c.l = j.value("l", 0);
        c.span_periods = j.value("span_periods", 2.0);
        c.samples_per_period = j.value("samples_per_period", 512);
        if (j.contains("sigma_z_m")) c.sigma_z_m = j.at("sigma_z_m").get<double>();
        if (j.contains("boundary_override")) {
            const json& b = j.at("boundary_override");
            c.boundary_override = BoundaryOverride{
                b.at("sigma0_m").get<double>(), b.at("sigma0_rate").get<double>()};
        }
        if (j.contains("alt_H_T")) c.alt_H_T = j.at("alt_H_T").get<double>();
    } catch (const json::exception& e) {
        throw domain_error(std::string{"config: "} + e.what());
    }
    return c;
}

json report_to_json(const ScenarioReport& r) {
    const ScenarioDerived& d = r.derived;
    json jd{{"gamma", d.gamma},
            {"beta", d.beta},
            {"sigma_L_m", d.sigma_L_m},
            {"omega_per_m", d.omega_per_m},
            {"cT_c_m", d.cT_c_m},
            {"T_c_s", d.T_c_s},
            {"hbar_omega_eV", d.hbar_omega_eV},
            {"c_tau_d_m", d.c_tau_d_m},
            {"tau_d_s", d.tau_d_s},
            {"z_R_m", d.z_R_m},
            {"rho_w_m", d.rho_w_m},
            {"rho_L_m", d.rho_L_m},
            {"rho0_m", d.rho0_m},
            {"drho_dz", d.drho_dz},
            {"rho0_rate", d.rho0_rate},
            {"sigma0_m", d.sigma0_m},
            {"sigma0_rate", d.sigma0_rate},
            {"xi1", d.xi1},
            {"xi2", d.xi2},
            {"xi2_alt", d.xi2_alt},
            {"sigma_st_m", d.sigma_st_m},
            {"rho_st_m", d.rho_st_m},
            {"rho_st_over_rho_L", d.rho_st_over_rho_L},
            {"mean_energy_eV", d.mean_energy_eV},
            {"landau_energy_eV", d.landau_energy_eV},
            {"energy_ratio", d.energy_ratio}};
    if (d.alt_ratio) jd["alt_ratio"] = *d.alt_ratio;
    return json{{"config", config_to_json(r.config)},
                {"derived", jd},
                {"trace", json{{"z_m", r.trace.z_m},
                               {"ct_m", r.trace.ct_m},
                               {"sigma_m", r.trace.sigma_m},
                               {"rho_m", r.trace.rho_m},
                               {"gouy_rad", r.trace.gouy_rad}}}};
}

ScenarioReport report_from_json(const json& j) {
    ScenarioReport r;
    try {
        r.config = config_from_json(j.at("config"));
        const json& jd = j.at("derived");
        ScenarioDerived& d = r.derived;
        d.gamma = jd.at("gamma").get<double>();
        d.beta = jd.at("beta").get<double>();
        d.sigma_L_m = jd.at("sigma_L_m").get<double>();
        d.omega_per_m = jd.at("omega_per_m").get<double>();
        d.cT_c_m = jd.at("cT_c_m").get<double>();
        d.T_c_s = jd.at("T_c_s").get<double>();
        d.hbar_omega_eV = jd.at("hbar_omega_eV").get<double>();
        d.c_tau_d_m = jd.at("c_tau_d_m").get<double>();
        d.tau_d_s = jd.at("tau_d_s").get<double>();
        d.z_R_m = jd.at("z_R_m").get<double>();
        d.rho_w_m = jd.at("rho_w_m").get<double>();
        d.rho_L_m = jd.at("rho_L_m").get<double>();
        d.rho0_m = jd.at("rho0_m").get<double>();
        d.drho_dz = jd.at("drho_dz").get<double>();
        d.rho0_rate = jd.at("rho0_rate").get<double>();
        d.sigma0_m = jd.at("sigma0_m").get<double>();
        d.sigma0_rate = jd.at("sigma0_rate").get<double>();
        d.xi1 = jd.at("xi1").get<double>();
        d.xi2 = jd.at("xi2").get<double>();
        d.xi2_alt = jd.at("xi2_alt").get<double>();
        d.sigma_st_m = jd.at("sigma_st_m").get<double>();
        d.rho_st_m = jd.at("rho_st_m").get<double>();
        d.rho_st_over_rho_L = jd.at("rho_st_over_rho_L").get<double>();
        d.mean_energy_eV = jd.at("mean_energy_eV").get<double>();
        d.landau_energy_eV = jd.at("landau_energy_eV").get<double>();
        d.energy_ratio = jd.at("energy_ratio").get<double>();
        if (jd.contains("alt_ratio")) d.alt_ratio = jd.at("alt_ratio").get<double>();
        const json& jt = j.at("trace");
        r.trace.z_m = jt.at("z_m").get<std::vector<double>>();
        r.trace.ct_m = jt.at("ct_m").get<std::vector<double>>();
        r.trace.sigma_m = jt.at("sigma_m").get<std::vector<double>>();
        r.trace.rho_m = jt.at("rho_m").get<std::vector<double>>();
        r.trace.gouy_rad = jt.at("gouy_rad").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw domain_error(std::string{"report: "} + e.what());
    }
    return r;
}

void emit_json(const ScenarioReport& r, std::ostream& out) {
    out << report_to_json(r).dump(2) << '\n';
}

void emit(const ScenarioReport& r, const std::string& format, std::ostream& out) {
    if (format == "csv")
        emit_csv(r, out);
    else if (format == "json")
        emit_json(r, out);
    else
        throw domain_error("emit: format must be csv or json");
}

} // namespace nslg

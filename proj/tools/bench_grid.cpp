// Timing comparison of the OpenMP grid kernels against their serial
// references, on the stationary scanning-microscope state.

#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "nslg/scenario.hpp"
#include "nslg/wavefunction.hpp"

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = now();
        f();
        best = std::min(best, now() - t0);
    }
    return best;
}

} // namespace

int main() {
    using namespace nslg;
    const ScenarioConfig cfg = preset("sem");
    const Kinematics kin = kinematics_from_kinetic_energy(cfg.kinetic_eV);
    const FieldScales scales = field_scales(cfg.H_T);
    const BeamSpec beam{cfg.n, cfg.l, cfg.sigma_w_m};
    const BoundaryState bs = boundary_state(beam, SourceGeometry{cfg.d_m}, kin);
    const FieldSolutionParams p =
        field_solution_params(bs.sigma0_m, bs.sigma0_rate, scales);
    const OpticalState st{p.sigma_st_m, 0.0, 0.0};

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns are serial\n");
#endif
    std::printf("%-22s %8s %11s %11s %8s\n", "kernel", "grid", "serial", "parallel",
                "speedup");

    for (const auto& [n_r, n_phi] : {std::pair{512, 128}, std::pair{1024, 256},
                                     std::pair{2048, 512}}) {
        const TransverseGrid g = grid_for_state(beam, st.sigma_m, n_r, n_phi);
        const PsiSample psi = psi_transverse_serial(g, beam, st);
        char label[32];
        std::snprintf(label, sizeof label, "%dx%d", n_r, n_phi);

        const double t_eval_s =
            time_best_of(3, [&] { (void)psi_transverse_serial(g, beam, st); });
        const double t_eval_p =
            time_best_of(3, [&] { (void)psi_transverse(g, beam, st); });
        std::printf("%-22s %8s %9.3f ms %9.3f ms %7.2fx\n", "psi_transverse", label,
                    1e3 * t_eval_s, 1e3 * t_eval_p, t_eval_s / t_eval_p);

        const double t_norm_s =
            time_best_of(5, [&] { (void)grid_norm_serial(g, psi); });
        const double t_norm_p = time_best_of(5, [&] { (void)grid_norm(g, psi); });
        std::printf("%-22s %8s %9.3f ms %9.3f ms %7.2fx\n", "grid_norm", label,
                    1e3 * t_norm_s, 1e3 * t_norm_p, t_norm_s / t_norm_p);

        const double t_lz_s =
            time_best_of(3, [&] { (void)grid_mean_lz_serial(g, psi); });
        const double t_lz_p = time_best_of(3, [&] { (void)grid_mean_lz(g, psi); });
        std::printf("%-22s %8s %9.3f ms %9.3f ms %7.2fx\n", "grid_mean_lz", label,
                    1e3 * t_lz_s, 1e3 * t_lz_p, t_lz_s / t_lz_p);
    }
    return 0;
}

// Acceptance suite: every release gate in one binary, one PASS/FAIL line
// per criterion. Exit status is the number of failed criteria.

#include "polmix/polmix.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace polmix;
using cplx = std::complex<double>;

namespace {

int g_failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail) {
    std::printf("%s  %2d. %-28s %s\n", pass ? "PASS" : "FAIL", number, name, detail.c_str());
    if (!pass) ++g_failures;
}

SimulationConfig reference_config() {
    const nlohmann::json j = {{"omega_A_over_2pi_Hz", 2.5e14}, {"mu_eA", 2.0},
                              {"a_m", 0.2e-6},                 {"gamma_over_2pi_Hz", 1.0e9},
                              {"Gamma_ex_over_2pi_Hz", 1.0e8}};
    return *parse_config_json(j).config;
}

constexpr double figure_k = 5.0e3;

struct RandomProbe {
    std::mt19937_64 rng{0xacceBULL};
    std::uniform_real_distribution<double> ks{0.0, 1.0e5};
    std::uniform_real_distribution<double> thetas{0.0, two_pi};
    ProbePoint next() { return {ks(rng), thetas(rng)}; }
};

double unitarity_defect(const PolaritonModes& modes) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            cplx dot{0.0, 0.0};
            for (int c = 0; c < 3; ++c)
                dot += modes.amplitude[i][c] * std::conj(modes.amplitude[j][c]);
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

bool close_rel(double a, double b, double rtol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 || std::abs(a - b) <= rtol * scale;
}

std::vector<std::size_t> local_maxima(const std::vector<double>& v) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] > v[i - 1] && v[i] > v[i + 1]) idx.push_back(i);
    return idx;
}

const std::vector<double>& figure_theta_set() {
    static const std::vector<double> set = {0.0, pi / 8.0, pi / 4.0, 3.0 * pi / 8.0, pi / 2.0};
    return set;
}

// 1. Closed forms vs the independent 3x3 Hermitian eigensolver on 1000
//    random probe points.
void criterion_1(const SimulationConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    RandomProbe probe;
    double worst_freq = 0.0, worst_weight = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const CouplingSet cs = coupling_constants(cfg.model, probe.next());
        const PolaritonModes closed = hopfield_amplitudes(cs, cfg.model.omega_A);
        const PolaritonModes oracle = diagonalize_oracle(cs, cfg.model.omega_A);
        for (int r = 0; r < 3; ++r) {
            worst_freq = std::max(worst_freq, std::abs(closed.omega[r] - oracle.omega[r]) /
                                                  std::abs(oracle.omega[r]));
            for (int c = 0; c < 3; ++c)
                worst_weight = std::max(worst_weight,
                                        std::abs(std::norm(closed.amplitude[r][c]) -
                                                 std::norm(oracle.amplitude[r][c])));
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "max rel freq err %.2e (tol 1e-10), max weight err %.2e (tol 1e-9), %.2f s",
                  worst_freq, worst_weight, seconds);
    report(1, "ORACLE EQUIVALENCE",
           worst_freq <= 1e-10 && worst_weight <= 1e-9 && seconds < 1.0, detail);
}

// 2. Half/half mixing and the 2|f| splitting at zero detuning.
void criterion_2(const SimulationConfig& cfg) {
    double worst_weight = 0.0, worst_gap = 0.0;
    for (double theta : figure_theta_set()) {
        const CouplingSet cs = coupling_constants(cfg.model, {0.0, theta});
        const PolaritonModes modes = hopfield_amplitudes(cs, cfg.model.omega_A);
        worst_weight =
            std::max(worst_weight, std::abs(modes.excitation_weight(Branch::upper) - 0.5));
        worst_weight =
            std::max(worst_weight, std::abs(modes.excitation_weight(Branch::lower) - 0.5));
        const double gap = modes.frequency(Branch::upper) - modes.frequency(Branch::lower);
        worst_gap = std::max(worst_gap, std::abs(gap - 2.0 * cs.f_abs) / (2.0 * cs.f_abs));
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "max ||X|^2-1/2| = %.2e (tol 1e-12), max rel gap err %.2e (tol 1e-10)",
                  worst_weight, worst_gap);
    report(2, "RESONANCE SPLITTING", worst_weight <= 1e-12 && worst_gap <= 1e-10, detail);
}

// 3. Unitarity of the orthonormal amplitude matrix; documented violation of
//    the legacy convention.
void criterion_3(const SimulationConfig& cfg) {
    RandomProbe probe;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const PolaritonModes modes =
            hopfield_amplitudes(coupling_constants(cfg.model, probe.next()), cfg.model.omega_A);
        worst = std::max(worst, unitarity_defect(modes));
    }
    const PolaritonModes legacy =
        hopfield_amplitudes(coupling_constants(cfg.model, {figure_k, pi / 4.0}),
                            cfg.model.omega_A, DarkModeConvention::paper);
    const double legacy_defect = unitarity_defect(legacy);
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "orthonormal defect %.2e (tol 1e-12); legacy defect %.2e (must exceed 1e-6)",
                  worst, legacy_defect);
    report(3, "UNITARITY", worst <= 1e-12 && legacy_defect > 1e-6, detail);
}

// 4. Per-branch normalization under both conventions.
void criterion_4(const SimulationConfig& cfg) {
    RandomProbe probe;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const CouplingSet cs = coupling_constants(cfg.model, probe.next());
        for (DarkModeConvention conv :
             {DarkModeConvention::orthonormal, DarkModeConvention::paper}) {
            const PolaritonModes modes = hopfield_amplitudes(cs, cfg.model.omega_A, conv);
            for (int r = 0; r < 3; ++r) {
                double norm = 0.0;
                for (int c = 0; c < 3; ++c) norm += std::norm(modes.amplitude[r][c]);
                worst = std::max(worst, std::abs(norm - 1.0));
            }
        }
    }
    char detail[80];
    std::snprintf(detail, sizeof detail, "max |norm - 1| = %.2e (tol 1e-12)", worst);
    report(4, "NORMALIZATION", worst <= 1e-12, detail);
}

// 5. Flux conservation without excitation damping across the fig13 grid.
void criterion_5(const SimulationConfig& cfg) {
    const DampingConfig d = DampingConfig::symmetric(cfg.damping.gamma(), 0.0);
    const std::vector<double> grid =
        default_omega_grid(cfg.model, {figure_k, pi / 4.0}, 2001);
    double worst = 0.0;
    for (double theta : figure_theta_set()) {
        const auto pts =
            spectrum_sweep(cfg.model, {figure_k, theta}, d, IncidentField{1.0, 0.0}, grid);
        for (const auto& pt : pts) worst = std::max(worst, std::abs(pt.A));
    }
    char detail[80];
    std::snprintf(detail, sizeof detail, "max |A| = %.2e (tol 1e-10)", worst);
    report(5, "FLUX CONSERVATION", worst <= 1e-10, detail);
}

// 6. Figure morphology at the reference parameters, s drive.
void criterion_6(const SimulationConfig& cfg) {
    const DampingConfig& d = cfg.damping;
    const std::vector<double> grid =
        default_omega_grid(cfg.model, {figure_k, pi / 4.0}, 2001);
    const PolaritonModes modes =
        branch_modes(coupling_constants(cfg.model, {figure_k, pi / 4.0}), cfg.model.omega_A);

    const auto pts = spectrum_sweep(modes, d, IncidentField{1.0, 0.0}, grid);
    std::vector<double> omega, t_s, absorption;
    for (const auto& pt : pts) {
        omega.push_back(pt.omega);
        t_s.push_back(pt.T_s);
        absorption.push_back(pt.A);
    }

    bool pass = true;
    std::string detail;

    // T_s: exactly three maxima, each pinned to a branch
    const auto t_peaks = local_maxima(t_s);
    pass = pass && t_peaks.size() == 3;
    detail += "T_s peaks " + std::to_string(t_peaks.size()) + "/3";
    if (t_peaks.size() == 3) {
        const Branch by_grid[3] = {Branch::lower, Branch::middle, Branch::upper};
        for (int i = 0; i < 3; ++i) {
            const Branch branch = by_grid[i];
            const double tol =
                d.gamma() + d.Gamma_ex * modes.excitation_weight(branch);  // (gamma+Gamma_r)
            pass = pass && std::abs(omega[t_peaks[static_cast<std::size_t>(i)]] -
                                    modes.frequency(branch)) <= tol;
        }
    }

    // A: exactly two peaks, neither near the dark branch
    const auto a_peaks = local_maxima(absorption);
    pass = pass && a_peaks.size() == 2;
    detail += ", A peaks " + std::to_string(a_peaks.size()) + "/2";
    for (std::size_t idx : a_peaks)
        pass = pass &&
               std::abs(omega[idx] - modes.frequency(Branch::middle)) >= 5.0 * d.gamma();

    // T_p == R_p exactly; cross conversion dies at 0 and pi/2 and peaks at pi/4
    double max_cross_pi4 = 0.0;
    for (double theta : figure_theta_set()) {
        const auto series =
            spectrum_sweep(cfg.model, {figure_k, theta}, d, IncidentField{1.0, 0.0}, grid);
        double peak = 0.0;
        for (const auto& pt : series) {
            pass = pass && pt.T_p == pt.R_p;
            peak = std::max(peak, pt.T_p);
        }
        if (theta == 0.0 || theta == pi / 2.0) {
            pass = pass && peak == 0.0;
        } else if (theta == pi / 4.0) {
            max_cross_pi4 = peak;
        }
    }
    for (double theta : figure_theta_set()) {
        if (theta == 0.0 || theta == pi / 4.0 || theta == pi / 2.0) continue;
        const auto series =
            spectrum_sweep(cfg.model, {figure_k, theta}, d, IncidentField{1.0, 0.0}, grid);
        double peak = 0.0;
        for (const auto& pt : series) peak = std::max(peak, pt.T_p);
        pass = pass && peak < max_cross_pi4;
    }
    detail += ", T_p=R_p, nodes at 0 and pi/2, max at pi/4";
    report(6, "SPECTRAL MORPHOLOGY", pass, detail);
}

// 7. theta = 0 transmission: opaque under the legacy convention, the bare
//    cavity Lorentzian under the orthonormal one.
void criterion_7(const SimulationConfig& cfg) {
    const Table t13 = run_figure_preset(cfg, "fig13");
    const Table t14 = run_figure_preset(cfg, "fig14");

    bool no_shifts = true;
    for (double flag : t13.column("pole_shifted").values) no_shifts = no_shifts && flag == 0.0;

    double worst_paper_t = 0.0, worst_paper_r = 0.0, worst_lorentzian = 0.0;
    for (double v : t13.column("T_s_theta_0_paper").values)
        worst_paper_t = std::max(worst_paper_t, std::abs(v));
    for (double v : t14.column("R_s_theta_0_paper").values)
        worst_paper_r = std::max(worst_paper_r, std::abs(v - 1.0));

    // same probe grid the preset used, in rad/s, no Hz round-trip
    const std::vector<double> grid =
        default_omega_grid(cfg.model, {figure_k, pi / 4.0}, 2001);
    const auto& t_s = t13.column("T_s_theta_0_orthonormal").values;
    const double omega_k = cavity_dispersion(cfg.model, figure_k, 1);
    const double gamma = cfg.damping.gamma();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double detune = grid[i] - omega_k;
        const double lorentzian = gamma * gamma / (detune * detune + gamma * gamma);
        worst_lorentzian = std::max(worst_lorentzian, std::abs(t_s[i] - lorentzian));
    }
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "legacy: max T_s %.2e, max |R_s-1| %.2e; orthonormal: max Lorentzian dev "
                  "%.2e (tol 1e-12)",
                  worst_paper_t, worst_paper_r, worst_lorentzian);
    report(7, "LEGACY THETA=0 REPRODUCTION",
           no_shifts && worst_paper_t <= 1e-12 && worst_paper_r <= 1e-12 &&
               worst_lorentzian <= 1e-12,
           detail);
}

// 8. Intracavity photon numbers are the transmissions over gamma.
void criterion_8(const SimulationConfig& cfg) {
    const std::vector<double> grid =
        default_omega_grid(cfg.model, {figure_k, pi / 4.0}, 2001);
    double worst = 0.0;
    for (double theta : figure_theta_set()) {
        const auto pts = spectrum_sweep(cfg.model, {figure_k, theta}, cfg.damping,
                                        IncidentField{1.0, 0.0}, grid);
        for (const auto& pt : pts) {
            const double gamma = cfg.damping.gamma();
            if (pt.T_s > 0.0)
                worst = std::max(worst, std::abs(pt.I_s - pt.T_s / gamma) / (pt.T_s / gamma));
            if (pt.T_p > 0.0)
                worst = std::max(worst, std::abs(pt.I_p - pt.T_p / gamma) / (pt.T_p / gamma));
        }
    }
    char detail[80];
    std::snprintf(detail, sizeof detail, "max rel deviation %.2e (tol 1e-12)", worst);
    report(8, "PHOTON-NUMBER IDENTITIES", worst <= 1e-12, detail);
}

// 9. p drive equals the label-exchanged s drive.
void criterion_9(const SimulationConfig& cfg) {
    const std::vector<double> grid =
        default_omega_grid(cfg.model, {figure_k, pi / 4.0}, 501);
    bool pass = true;
    double worst = 0.0;
    for (double theta : figure_theta_set()) {
        const PolaritonModes modes =
            branch_modes(coupling_constants(cfg.model, {figure_k, theta}), cfg.model.omega_A);
        PolaritonModes swapped = modes;
        for (int r = 0; r < 3; ++r) std::swap(swapped.amplitude[r][1], swapped.amplitude[r][2]);

        const auto p_drive = spectrum_sweep(modes, cfg.damping, IncidentField{0.0, 1.0}, grid);
        const auto s_swapped =
            spectrum_sweep(swapped, cfg.damping, IncidentField{1.0, 0.0}, grid);
        for (std::size_t i = 0; i < p_drive.size(); ++i) {
            const double pairs[6][2] = {
                {p_drive[i].T_p, s_swapped[i].T_s}, {p_drive[i].T_s, s_swapped[i].T_p},
                {p_drive[i].R_p, s_swapped[i].R_s}, {p_drive[i].R_s, s_swapped[i].R_p},
                {p_drive[i].I_p, s_swapped[i].I_s}, {p_drive[i].A, s_swapped[i].A}};
            for (const auto& pair : pairs) {
                pass = pass && close_rel(pair[0], pair[1], 1e-12);
                const double scale = std::max({std::abs(pair[0]), std::abs(pair[1]), 1e-300});
                worst = std::max(worst, std::abs(pair[0] - pair[1]) / scale);
            }
        }
    }
    char detail[80];
    std::snprintf(detail, sizeof detail, "max rel deviation %.2e (tol 1e-12)", worst);
    report(9, "S<->P EXCHANGE", pass, detail);
}

// 10. Dispersive-limit branch shifts at delta = 100 |f|.
void criterion_10(const SimulationConfig& cfg) {
    double lo = 1.0e5, hi = 1.0e7;
    auto ratio = [&](double k) {
        const CouplingSet cs = coupling_constants(cfg.model, {k, pi / 4.0});
        return cs.delta_k / cs.f_abs;
    };
    for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (ratio(mid) < 100.0 ? lo : hi) = mid;
    }
    const CouplingSet cs = coupling_constants(cfg.model, {0.5 * (lo + hi), pi / 4.0});
    const auto exact = eigenfrequencies(cs, cfg.model.omega_A);
    const DispersiveShift approx = large_detuning_approx(cs, cfg.model.omega_A);
    const double shift = cs.f_abs2() / (2.0 * cs.delta_k);
    const double err_up = std::abs(approx.upper - exact[0]);
    const double err_lo = std::abs(approx.lower - exact[2]);
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "delta/|f| = %.3f, errors %.2e / %.2e rad/s (tol %.2e)",
                  cs.delta_k / cs.f_abs, err_up, err_lo, 1e-3 * shift);
    report(10, "DISPERSIVE LIMIT", err_up <= 1e-3 * shift && err_lo <= 1e-3 * shift, detail);
}

// 11. General linear solve vs the transcribed closed form on random damped
//     configurations with identical mirrors.
void criterion_11(const SimulationConfig& cfg) {
    std::mt19937_64 rng{0x11acceBULL};
    std::uniform_real_distribution<double> ks(0.0, 1.0e5);
    std::uniform_real_distribution<double> thetas(0.0, two_pi);
    std::uniform_real_distribution<double> log_gamma(8.0, 10.0);
    std::uniform_real_distribution<double> log_gex(7.0, 9.0);
    std::uniform_real_distribution<double> offsets(-300.0, 300.0);

    bool pass = true;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const PolaritonModes modes = branch_modes(
            coupling_constants(cfg.model, {ks(rng), thetas(rng)}), cfg.model.omega_A);
        const DampingConfig d =
            DampingConfig::symmetric(hz_to_angular(std::pow(10.0, log_gamma(rng))),
                                     hz_to_angular(std::pow(10.0, log_gex(rng))));
        const double omega = cfg.model.omega_A + offsets(rng) * d.gamma();
        const LambdaMatrix lambda = lambda_matrix(complex_branches(modes, d), modes, omega);
        const ScatteringAmplitudes general =
            solve_scattering(lambda, d, IncidentField{1.0, 0.0});
        const ScatteringAmplitudes closed = solve_scattering_closed_form(lambda, d.gamma(), 1.0);
        const cplx pairs[6][2] = {{general.a_s, closed.a_s},
                                  {general.a_p, closed.a_p},
                                  {general.b_out_s, closed.b_out_s},
                                  {general.b_out_p, closed.b_out_p},
                                  {general.c_out_s, closed.c_out_s},
                                  {general.c_out_p, closed.c_out_p}};
        for (const auto& pair : pairs) {
            const double scale = std::max({std::abs(pair[0]), std::abs(pair[1]), 1e-300});
            const double err = std::abs(pair[0] - pair[1]) / scale;
            worst = std::max(worst, err);
            pass = pass && err <= 1e-12;
        }
    }
    char detail[80];
    std::snprintf(detail, sizeof detail, "max rel deviation %.2e (tol 1e-12)", worst);
    report(11, "GENERAL-SOLVER CROSS-CHECK", pass, detail);
}

// 12. Byte-identical CSV across reruns and the sidecar round-trip, for every
//     preset.
void criterion_12(const SimulationConfig& cfg) {
    bool pass = true;
    std::string first_divergence;
    for (const auto& preset : figure_presets()) {
        const std::string run1 = csv_string(run_figure_preset(cfg, preset.id));
        const std::string run2 = csv_string(run_figure_preset(cfg, preset.id));

        const nlohmann::json sidecar = resolved_config_json(cfg);
        const ConfigResult round_trip = parse_config_json(nlohmann::json::parse(sidecar.dump()));
        const std::string run3 =
            round_trip.ok() ? csv_string(run_figure_preset(*round_trip.config, preset.id)) : "";

        if (run1 != run2 || run1 != run3) {
            pass = false;
            if (first_divergence.empty()) first_divergence = preset.id;
        }
    }
    report(12, "DETERMINISM", pass,
           pass ? "16 presets byte-identical across reruns and config round-trip"
                : "first divergence at " + first_divergence);
}

}  // namespace

int main() {
    const SimulationConfig cfg = reference_config();
    try {
        criterion_1(cfg);
        criterion_2(cfg);
        criterion_3(cfg);
        criterion_4(cfg);
        criterion_5(cfg);
        criterion_6(cfg);
        criterion_7(cfg);
        criterion_8(cfg);
        criterion_9(cfg);
        criterion_10(cfg);
        criterion_11(cfg);
        criterion_12(cfg);
    } catch (const std::exception& e) {
        std::printf("FAIL  acceptance suite aborted: %s\n", e.what());
        return 99;
    }
    std::printf("%d/12 criteria passed\n", 12 - g_failures);
    return g_failures;
}

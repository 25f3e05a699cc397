#pragma once

// Canned figure sweeps (fig4 .. fig19). Every preset binds the reference
// device parameters from the loaded config to one data set:
//
//   fig4        branch dispersions vs k at theta = pi/4
//   fig5..fig7  upper-branch weights vs k (full / zoomed / extended range)
//   fig8, fig9  lower- and middle-branch weights vs k
//   fig10..12   branch weights vs theta at k = 5e-7 1/angstrom
//   fig13..16   T_s / R_s / T_p,R_p / A spectra for five dipole angles,
//               s-polarized drive, emitted for both dark-mode conventions
//   fig17..19   transmitted/reflected phase shifts at theta = pi/4
//
// Spectra and phase presets probe 2001 frequencies around the transition;
// weight presets use 501-point parameter grids.

#include "polmix/csv.hpp"
#include "polmix/sweep.hpp"
#include "polmix/config.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace polmix {

struct unknown_preset_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PresetOptions {
    /// Convention for single-convention presets (weights, phases); the
    /// spectra presets fig13..fig16 always emit both.
    DarkModeConvention convention = DarkModeConvention::orthonormal;
};

struct FigurePreset {
    std::string id;
    std::string description;
};

inline const std::vector<FigurePreset>& figure_presets() {
    static const std::vector<FigurePreset> presets = {
        {"fig4", "polariton branch dispersions Omega_r/2pi vs k at theta=pi/4"},
        {"fig5", "upper-branch weights |X|^2, |Y_s|^2, |Y_p|^2 vs k at theta=pi/4"},
        {"fig6", "upper-branch weights vs k, small-k zoom"},
        {"fig7", "upper-branch weights vs k, extended range"},
        {"fig8", "lower-branch weights vs k at theta=pi/4"},
        {"fig9", "middle-branch weights vs k at theta=pi/4 (X column is 0)"},
        {"fig10", "upper-branch weights vs theta at k=5e-7 1/angstrom"},
        {"fig11", "lower-branch weights vs theta at k=5e-7 1/angstrom"},
        {"fig12", "middle-branch weights vs theta at k=5e-7 1/angstrom"},
        {"fig13", "transmission T_s vs frequency for five dipole angles, s drive"},
        {"fig14", "reflection R_s vs frequency for five dipole angles, s drive"},
        {"fig15", "cross-polarized T_p and R_p vs frequency for five angles, s drive"},
        {"fig16", "absorption A vs frequency for five dipole angles, s drive"},
        {"fig17", "transmitted s phase shift vs frequency at theta=pi/4, s drive"},
        {"fig18", "reflected s phase shift vs frequency at theta=pi/4, s drive"},
        {"fig19", "transmitted/reflected p phase shifts vs frequency at theta=pi/4, s drive"},
    };
    return presets;
}

inline bool is_figure_preset(const std::string& id) {
    for (const auto& p : figure_presets())
        if (p.id == id) return true;
    return false;
}

namespace detail {

inline constexpr double figure_k = 5.0e3;  // 5e-7 1/angstrom in 1/m

inline const std::vector<LabeledAngle>& figure_angles() {
    static const std::vector<LabeledAngle> angles = {
        {0.0, "theta_0"},
        {pi / 8.0, "theta_pi_8"},
        {pi / 4.0, "theta_pi_4"},
        {3.0 * pi / 8.0, "theta_3pi_8"},
        {pi / 2.0, "theta_pi_2"},
    };
    return angles;
}

inline Table select_columns(const Table& t, const std::vector<std::string>& names) {
    Table out;
    for (const auto& name : names) out.columns.push_back(t.column(name));
    return out;
}

inline Table weights_preset(const SimulationConfig& cfg, double k_max, Branch branch,
                            DarkModeConvention convention) {
    const std::vector<double> grid = linspace(0.0, k_max, 501);
    const std::array<Branch, 1> branches{branch};
    return weights_vs_k_table(cfg.model, grid, pi / 4.0, convention, branches);
}

inline Table spectra_preset(const SimulationConfig& cfg,
                            std::vector<SpectralObservable> observables_out) {
    static const std::array<DarkModeConvention, 2> conventions{DarkModeConvention::orthonormal,
                                                               DarkModeConvention::paper};
    const std::vector<double> grid =
        default_omega_grid(cfg.model, ProbePoint{figure_k, pi / 4.0});
    return spectra_series_table(cfg.model, cfg.damping, figure_k, figure_angles(), conventions,
                                IncidentField{1.0, 0.0}, grid, observables_out);
}

inline Table phases_preset(const SimulationConfig& cfg, DarkModeConvention convention,
                           const std::vector<std::string>& phase_columns) {
    const std::vector<double> grid =
        default_omega_grid(cfg.model, ProbePoint{figure_k, pi / 4.0});
    const Table full = phases_table(cfg.model, cfg.damping, ProbePoint{figure_k, pi / 4.0},
                                    convention, IncidentField{1.0, 0.0}, grid, true);
    std::vector<std::string> names = {"omega_over_2pi_Hz"};
    for (const auto& c : phase_columns) {
        names.push_back(c + "_rad");
        names.push_back(c + "_unwrapped_rad");
    }
    names.push_back("pole_shifted");
    return select_columns(full, names);
}

}  // namespace detail

inline Table run_figure_preset(const SimulationConfig& cfg, const std::string& id,
                               const PresetOptions& options = {}) {
    using detail::figure_k;
    const DarkModeConvention conv = options.convention;

    if (id == "fig4") {
        const std::vector<double> grid = linspace(0.0, 1.0e5, 501);
        return dispersion_table(cfg.model, grid, pi / 4.0);
    }
    if (id == "fig5") return detail::weights_preset(cfg, 1.0e6, Branch::upper, conv);
    if (id == "fig6") return detail::weights_preset(cfg, 2.0e4, Branch::upper, conv);
    if (id == "fig7") return detail::weights_preset(cfg, 2.0e7, Branch::upper, conv);
    if (id == "fig8") return detail::weights_preset(cfg, 1.0e6, Branch::lower, conv);
    if (id == "fig9") return detail::weights_preset(cfg, 1.0e6, Branch::middle, conv);

    if (id == "fig10" || id == "fig11" || id == "fig12") {
        const Branch branch = (id == "fig10") ? Branch::upper
                              : (id == "fig11") ? Branch::lower
                                                : Branch::middle;
        const std::vector<double> grid = linspace(0.0, pi / 2.0, 501);
        const std::array<Branch, 1> branches{branch};
        return weights_vs_theta_table(cfg.model, figure_k, grid, conv, branches);
    }

    if (id == "fig13")
        return detail::spectra_preset(cfg, {SpectralObservable::transmission_s});
    if (id == "fig14")
        return detail::spectra_preset(cfg, {SpectralObservable::reflection_s});
    if (id == "fig15")
        return detail::spectra_preset(
            cfg, {SpectralObservable::transmission_p, SpectralObservable::reflection_p});
    if (id == "fig16")
        return detail::spectra_preset(cfg, {SpectralObservable::absorption});

    if (id == "fig17") return detail::phases_preset(cfg, conv, {"phase_t_s"});
    if (id == "fig18") return detail::phases_preset(cfg, conv, {"phase_r_s"});
    if (id == "fig19") return detail::phases_preset(cfg, conv, {"phase_t_p", "phase_r_p"});

    throw unknown_preset_error("unknown preset '" + id + "'");
}

}  // namespace polmix

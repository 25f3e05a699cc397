#pragma once

// Sweep engines: tabulated branch dispersions, excitation/photon weights and
// optical spectra over parameter grids, as plain named-column tables ready
// for CSV emission.

#include "polmix/spectra.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polmix {

/// One named output column. integral marks flag columns that should render
/// as plain integers instead of scientific notation.
struct Column {
    std::string name;
    std::vector<double> values;
    bool integral = false;
};

struct Table {
    std::vector<Column> columns;

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().values.size(); }

    const Column& column(const std::string& name) const {
        for (const auto& c : columns)
            if (c.name == name) return c;
        throw std::out_of_range("Table: no column named " + name);
    }

    bool has_column(const std::string& name) const {
        for (const auto& c : columns)
            if (c.name == name) return true;
        return false;
    }
};

inline std::vector<double> linspace(double start, double stop, int count) {
    if (count < 2) throw std::invalid_argument("linspace: count must be >= 2");
    if (!(start < stop)) throw std::invalid_argument("linspace: start must be < stop");
    std::vector<double> grid(static_cast<std::size_t>(count));
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = start + step * i;
    grid.back() = stop;
    return grid;
}

/// Cumulative removal of 2 pi jumps along a sampled phase curve.
inline std::vector<double> unwrap_phases(std::span<const double> principal) {
    std::vector<double> out(principal.begin(), principal.end());
    for (std::size_t i = 1; i < out.size(); ++i) {
        double jump = principal[i] - principal[i - 1];
        jump -= two_pi * std::round(jump / two_pi);
        out[i] = out[i - 1] + jump;
    }
    return out;
}

inline const char* branch_name(Branch r) {
    switch (r) {
        case Branch::upper: return "upper";
        case Branch::middle: return "middle";
        case Branch::lower: return "lower";
    }
    return "";
}

inline const char* convention_name(DarkModeConvention c) {
    return c == DarkModeConvention::orthonormal ? "orthonormal" : "paper";
}

/// Branch frequencies vs in-plane wavenumber at a fixed dipole angle.
inline Table dispersion_table(const ModelConfig& cfg, std::span<const double> k_grid,
                              double theta) {
    Table t;
    t.columns = {{"k_inv_m", {}, false},
                 {"Omega_upper_over_2pi_Hz", {}, false},
                 {"Omega_middle_over_2pi_Hz", {}, false},
                 {"Omega_lower_over_2pi_Hz", {}, false}};
    for (double k : k_grid) {
        const CouplingSet cs = coupling_constants(cfg, ProbePoint{k, theta});
        const auto omegas = eigenfrequencies(cs, cfg.omega_A);
        t.columns[0].values.push_back(k);
        for (int r = 0; r < 3; ++r)
            t.columns[static_cast<std::size_t>(r) + 1].values.push_back(angular_to_hz(omegas[r]));
    }
    return t;
}

namespace detail {

inline void append_weight_columns(Table& t, std::span<const Branch> branches) {
    for (Branch r : branches) {
        const std::string suffix = branch_name(r);
        t.columns.push_back({"X_abs2_" + suffix, {}, false});
        t.columns.push_back({"Y_s_abs2_" + suffix, {}, false});
        t.columns.push_back({"Y_p_abs2_" + suffix, {}, false});
    }
}

inline void append_weight_row(Table& t, std::size_t first_col, const PolaritonModes& modes,
                              std::span<const Branch> branches) {
    std::size_t col = first_col;
    for (Branch r : branches) {
        t.columns[col++].values.push_back(modes.excitation_weight(r));
        t.columns[col++].values.push_back(modes.photon_weight_s(r));
        t.columns[col++].values.push_back(modes.photon_weight_p(r));
    }
}

}  // namespace detail

/// |X|^2, |Y_s|^2, |Y_p|^2 of the selected branches vs k at fixed theta.
inline Table weights_vs_k_table(const ModelConfig& cfg, std::span<const double> k_grid,
                                double theta, DarkModeConvention convention,
                                std::span<const Branch> branches) {
    Table t;
    t.columns = {{"k_inv_m", {}, false}};
    detail::append_weight_columns(t, branches);
    for (double k : k_grid) {
        const CouplingSet cs = coupling_constants(cfg, ProbePoint{k, theta});
        const PolaritonModes modes = branch_modes(cs, cfg.omega_A, convention);
        t.columns[0].values.push_back(k);
        detail::append_weight_row(t, 1, modes, branches);
    }
    return t;
}

/// Same weights vs theta at fixed k.
inline Table weights_vs_theta_table(const ModelConfig& cfg, double k,
                                    std::span<const double> theta_grid,
                                    DarkModeConvention convention,
                                    std::span<const Branch> branches) {
    Table t;
    t.columns = {{"theta_rad", {}, false}};
    detail::append_weight_columns(t, branches);
    for (double theta : theta_grid) {
        const CouplingSet cs = coupling_constants(cfg, ProbePoint{k, theta});
        const PolaritonModes modes = branch_modes(cs, cfg.omega_A, convention);
        t.columns[0].values.push_back(theta);
        detail::append_weight_row(t, 1, modes, branches);
    }
    return t;
}

/// Default probe grid for spectra: 2001 frequencies spanning
/// omega_A/2pi +- 3|f|/pi Hz, which brackets all three branches by several
/// splittings.
inline std::vector<double> default_omega_grid(const ModelConfig& cfg, const ProbePoint& p,
                                              int count = 2001) {
    const CouplingSet cs = coupling_constants(cfg, p);
    const double center_hz = angular_to_hz(cfg.omega_A);
    const double half_hz = 3.0 * cs.f_abs / pi;
    std::vector<double> grid = linspace(center_hz - half_hz, center_hz + half_hz, count);
    for (double& v : grid) v = hz_to_angular(v);
    return grid;
}

/// Shift grid points off undamped poles (window = guard, one grid step up
/// per attempt), mirroring the single-series sweep behavior so that several
/// series can share one frequency column.
struct PoleAdjustedGrid {
    std::vector<double> omega;
    std::vector<char> shifted;
};

inline PoleAdjustedGrid adjust_grid_for_poles(std::span<const double> grid,
                                              std::span<const double> poles, double guard) {
    PoleAdjustedGrid out;
    out.omega.assign(grid.begin(), grid.end());
    out.shifted.assign(grid.size(), 0);
    if (guard <= 0.0 || poles.empty()) return out;
    for (std::size_t i = 0; i < out.omega.size(); ++i) {
        const double step = (i + 1 < grid.size()) ? grid[i + 1] - grid[i] : grid[i] - grid[i - 1];
        for (int attempt = 0; attempt < 4; ++attempt) {
            bool near_pole = false;
            for (double pole : poles)
                if (std::abs(out.omega[i] - pole) < guard) near_pole = true;
            if (!near_pole) break;
            out.omega[i] += step;
            out.shifted[i] = 1;
        }
    }
    return out;
}

/// Full observable set for one (k, theta, convention, drive) series.
inline Table spectra_table(const ModelConfig& cfg, const DampingConfig& d, const ProbePoint& p,
                           DarkModeConvention convention, const IncidentField& drive,
                           std::span<const double> omega_grid) {
    const std::vector<SpectraPoint> pts = spectrum_sweep(cfg, p, d, drive, omega_grid, convention);
    Table t;
    t.columns = {{"omega_over_2pi_Hz", {}, false},
                 {"T_s", {}, false},
                 {"T_p", {}, false},
                 {"R_s", {}, false},
                 {"R_p", {}, false},
                 {"A", {}, false},
                 {"I_s", {}, false},
                 {"I_p", {}, false},
                 {"pole_shifted", {}, true}};
    for (const SpectraPoint& pt : pts) {
        t.columns[0].values.push_back(angular_to_hz(pt.omega));
        t.columns[1].values.push_back(pt.T_s);
        t.columns[2].values.push_back(pt.T_p);
        t.columns[3].values.push_back(pt.R_s);
        t.columns[4].values.push_back(pt.R_p);
        t.columns[5].values.push_back(pt.A);
        t.columns[6].values.push_back(pt.I_s);
        t.columns[7].values.push_back(pt.I_p);
        t.columns[8].values.push_back(pt.pole_shifted ? 1.0 : 0.0);
    }
    return t;
}

enum class SpectralObservable { transmission_s, reflection_s, transmission_p, reflection_p, absorption };

inline const char* observable_name(SpectralObservable o) {
    switch (o) {
        case SpectralObservable::transmission_s: return "T_s";
        case SpectralObservable::reflection_s: return "R_s";
        case SpectralObservable::transmission_p: return "T_p";
        case SpectralObservable::reflection_p: return "R_p";
        case SpectralObservable::absorption: return "A";
    }
    return "";
}

inline double observable_value(const SpectraPoint& pt, SpectralObservable o) {
    switch (o) {
        case SpectralObservable::transmission_s: return pt.T_s;
        case SpectralObservable::reflection_s: return pt.R_s;
        case SpectralObservable::transmission_p: return pt.T_p;
        case SpectralObservable::reflection_p: return pt.R_p;
        case SpectralObservable::absorption: return pt.A;
    }
    return 0.0;
}

struct LabeledAngle {
    double theta;
    std::string label;  // column tag, e.g. "theta_pi_4"
};

/// Selected observables over several dipole angles and conventions on one
/// shared frequency column (s-polarized drive geometry of the figure sets).
inline Table spectra_series_table(const ModelConfig& cfg, const DampingConfig& d, double k,
                                  std::span<const LabeledAngle> angles,
                                  std::span<const DarkModeConvention> conventions,
                                  const IncidentField& drive,
                                  std::span<const double> omega_grid,
                                  std::span<const SpectralObservable> observables_out) {
    d.validate();

    struct Series {
        PolaritonModes modes;
        std::string suffix;
    };
    std::vector<Series> series;
    std::vector<double> poles;
    for (DarkModeConvention conv : conventions) {
        for (const LabeledAngle& angle : angles) {
            const CouplingSet cs = coupling_constants(cfg, ProbePoint{k, angle.theta});
            Series s{branch_modes(cs, cfg.omega_A, conv),
                     "_" + angle.label + "_" + convention_name(conv)};
            const auto series_poles = undamped_pole_frequencies(s.modes, d);
            poles.insert(poles.end(), series_poles.begin(), series_poles.end());
            series.push_back(std::move(s));
        }
    }

    const PoleAdjustedGrid grid = adjust_grid_for_poles(omega_grid, poles, 1e-3 * d.gamma());

    Table t;
    t.columns = {{"omega_over_2pi_Hz", {}, false}};
    for (const Series& s : series)
        for (SpectralObservable o : observables_out)
            t.columns.push_back({observable_name(o) + s.suffix, {}, false});
    t.columns.push_back({"pole_shifted", {}, true});

    for (std::size_t i = 0; i < grid.omega.size(); ++i) {
        t.columns[0].values.push_back(angular_to_hz(grid.omega[i]));
        std::size_t col = 1;
        for (const Series& s : series) {
            const SpectraPoint pt = spectra_point(s.modes, d, drive, grid.omega[i]);
            for (SpectralObservable o : observables_out)
                t.columns[col++].values.push_back(observable_value(pt, o));
        }
        t.columns.back().values.push_back(grid.shifted[i] ? 1.0 : 0.0);
    }
    return t;
}

/// Phase shifts of the transmitted and reflected fields for one series;
/// optionally with unwrapped companions for plotting continuity.
inline Table phases_table(const ModelConfig& cfg, const DampingConfig& d, const ProbePoint& p,
                          DarkModeConvention convention, const IncidentField& drive,
                          std::span<const double> omega_grid, bool include_unwrapped) {
    const std::vector<SpectraPoint> pts = spectrum_sweep(cfg, p, d, drive, omega_grid, convention);

    Table t;
    t.columns = {{"omega_over_2pi_Hz", {}, false},
                 {"phase_t_s_rad", {}, false},
                 {"phase_t_p_rad", {}, false},
                 {"phase_r_s_rad", {}, false},
                 {"phase_r_p_rad", {}, false}};
    for (const SpectraPoint& pt : pts) {
        t.columns[0].values.push_back(angular_to_hz(pt.omega));
        t.columns[1].values.push_back(pt.phase_t_s);
        t.columns[2].values.push_back(pt.phase_t_p);
        t.columns[3].values.push_back(pt.phase_r_s);
        t.columns[4].values.push_back(pt.phase_r_p);
    }
    if (include_unwrapped) {
        for (int c = 1; c <= 4; ++c) {
            const Column& src = t.columns[static_cast<std::size_t>(c)];
            Column unwrapped{src.name.substr(0, src.name.size() - 4) + "_unwrapped_rad",
                             unwrap_phases(src.values), false};
            t.columns.push_back(std::move(unwrapped));
        }
    }
    Column flags{"pole_shifted", {}, true};
    for (const SpectraPoint& pt : pts) flags.values.push_back(pt.pole_shifted ? 1.0 : 0.0);
    t.columns.push_back(std::move(flags));
    return t;
}

}  // namespace polmix

// polmix command-line front end.
//
//   polmix run <config.json> <preset|sweep-kind> <outdir> [options]
//   polmix validate <config.json>
//   polmix list-presets
//
// run emits <outdir>/<name>.csv plus a JSON sidecar <outdir>/<name>.config.json
// holding the fully resolved configuration; feeding the sidecar back as the
// config reproduces the CSV byte for byte.
//
// Sweep kinds: dispersion, weights-vs-k, weights-vs-theta, spectra, phases.
// Grid options take start:stop:count[:unit]; fixed values take value[:unit].
// Units: k in {1/m, 1/A}, theta in {rad, deg}, omega in {Hz, rad/s}.
//
// Exit codes: 0 success, 2 config validation failure, 3 unknown preset.

#include "polmix/polmix.hpp"

#include <CLI11.hpp>

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config_error = 2;
constexpr int exit_unknown_preset = 3;

enum class QuantityKind { wavenumber, angle, frequency };

struct ValueSpec {
    bool is_grid = false;
    double scalar = 0.0;
    std::vector<double> grid;
};

double convert_unit(double value, const std::string& unit, QuantityKind kind) {
    switch (kind) {
        case QuantityKind::wavenumber:
            if (unit == "1/m") return value;
            if (unit == "1/A" || unit == "1/angstrom") return polmix::per_angstrom_to_per_m(value);
            break;
        case QuantityKind::angle:
            if (unit == "rad") return value;
            if (unit == "deg") return polmix::deg_to_rad(value);
            break;
        case QuantityKind::frequency:
            if (unit == "Hz") return polmix::hz_to_angular(value);
            if (unit == "rad/s") return value;
            break;
    }
    throw CLI::ValidationError("unsupported unit '" + unit + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(text.substr(pos));
            return parts;
        }
        parts.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
}

// value | value:unit | start:stop:count | start:stop:count:unit
ValueSpec parse_value_spec(const std::string& text, QuantityKind kind,
                           const std::string& option_name) {
    const std::vector<std::string> parts = split(text, ':');
    const auto fail = [&](const std::string& why) -> ValueSpec {
        throw CLI::ValidationError(option_name + ": " + why + " in '" + text + "'");
    };
    try {
        if (parts.size() == 1 || parts.size() == 2) {
            const std::string unit =
                parts.size() == 2 ? parts[1]
                                  : (kind == QuantityKind::wavenumber ? "1/m"
                                     : kind == QuantityKind::angle    ? "rad"
                                                                      : "Hz");
            ValueSpec spec;
            spec.scalar = convert_unit(std::stod(parts[0]), unit, kind);
            return spec;
        }
        if (parts.size() == 3 || parts.size() == 4) {
            const std::string unit =
                parts.size() == 4 ? parts[3]
                                  : (kind == QuantityKind::wavenumber ? "1/m"
                                     : kind == QuantityKind::angle    ? "rad"
                                                                      : "Hz");
            const double start = convert_unit(std::stod(parts[0]), unit, kind);
            const double stop = convert_unit(std::stod(parts[1]), unit, kind);
            const int count = std::stoi(parts[2]);
            ValueSpec spec;
            spec.is_grid = true;
            spec.grid = polmix::linspace(start, stop, count);
            return spec;
        }
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return fail("expected value[:unit] or start:stop:count[:unit]");
}

int report_config_errors(const std::vector<std::string>& errors) {
    std::cerr << "config validation failed:\n";
    for (const auto& e : errors) std::cerr << "  - " << e << "\n";
    return exit_config_error;
}

void write_outputs(const std::filesystem::path& outdir, const std::string& name,
                   const polmix::Table& table, const polmix::SimulationConfig& cfg) {
    std::filesystem::create_directories(outdir);
    const auto csv_path = outdir / (name + ".csv");
    polmix::write_csv_file(csv_path, table);

    const auto sidecar_path = outdir / (name + ".config.json");
    std::ofstream sidecar(sidecar_path, std::ios::binary);
    if (!sidecar) throw std::runtime_error("cannot open " + sidecar_path.string());
    sidecar << polmix::resolved_config_json(cfg).dump(2) << "\n";

    std::cout << "wrote " << csv_path.string() << "\n";
    std::cout << "wrote " << sidecar_path.string() << "\n";
}

struct RunArgs {
    std::string config_path;
    std::string spec;
    std::string outdir;
    std::string convention = "orthonormal";
    bool unwrap_phases = false;
    double paper_L = 0.0;
    std::string k_spec;
    std::string theta_spec;
    std::string omega_spec;
    std::string drive = "s";
};

int run_command(const RunArgs& args) {
    polmix::ConfigResult loaded = polmix::load_config_file(args.config_path);
    if (!loaded.ok()) return report_config_errors(loaded.errors);
    polmix::SimulationConfig cfg = *loaded.config;

    if (args.paper_L > 0.0) {
        cfg.model.L = args.paper_L;
        cfg.L_m = args.paper_L;
        cfg.L_derived = false;
    }

    const polmix::DarkModeConvention convention = args.convention == "paper"
                                                      ? polmix::DarkModeConvention::paper
                                                      : polmix::DarkModeConvention::orthonormal;

    if (polmix::is_figure_preset(args.spec)) {
        polmix::PresetOptions options;
        options.convention = convention;
        const polmix::Table table = polmix::run_figure_preset(cfg, args.spec, options);
        write_outputs(args.outdir, args.spec, table, cfg);
        return exit_ok;
    }

    static const std::array<std::string, 5> kinds = {"dispersion", "weights-vs-k",
                                                     "weights-vs-theta", "spectra", "phases"};
    bool known_kind = false;
    for (const auto& kind : kinds) known_kind = known_kind || kind == args.spec;
    if (!known_kind) {
        std::cerr << "unknown preset '" << args.spec << "' (see list-presets, or use one of"
                  << " dispersion, weights-vs-k, weights-vs-theta, spectra, phases)\n";
        return exit_unknown_preset;
    }

    const double default_k = 5.0e3;      // 5e-7 1/angstrom
    const double default_theta = polmix::pi / 4.0;

    const auto scalar_or = [&](const std::string& text, QuantityKind kind, const char* name,
                               double fallback) {
        if (text.empty()) return fallback;
        const ValueSpec spec = parse_value_spec(text, kind, name);
        if (spec.is_grid) throw CLI::ValidationError(std::string(name) + ": expected a scalar");
        return spec.scalar;
    };
    const auto grid_or = [&](const std::string& text, QuantityKind kind, const char* name,
                             std::vector<double> fallback) {
        if (text.empty()) return fallback;
        const ValueSpec spec = parse_value_spec(text, kind, name);
        if (!spec.is_grid)
            throw CLI::ValidationError(std::string(name) + ": expected start:stop:count");
        return spec.grid;
    };

    const polmix::IncidentField drive = args.drive == "p" ? polmix::IncidentField{0.0, 1.0}
                                                          : polmix::IncidentField{1.0, 0.0};
    static const std::array<polmix::Branch, 3> all_branches = {
        polmix::Branch::upper, polmix::Branch::middle, polmix::Branch::lower};

    polmix::Table table;
    if (args.spec == "dispersion") {
        const auto k_grid = grid_or(args.k_spec, QuantityKind::wavenumber, "--k",
                                    polmix::linspace(0.0, 1.0e5, 501));
        const double theta =
            scalar_or(args.theta_spec, QuantityKind::angle, "--theta", default_theta);
        table = polmix::dispersion_table(cfg.model, k_grid, theta);
    } else if (args.spec == "weights-vs-k") {
        const auto k_grid = grid_or(args.k_spec, QuantityKind::wavenumber, "--k",
                                    polmix::linspace(0.0, 1.0e5, 501));
        const double theta =
            scalar_or(args.theta_spec, QuantityKind::angle, "--theta", default_theta);
        table = polmix::weights_vs_k_table(cfg.model, k_grid, theta, convention, all_branches);
    } else if (args.spec == "weights-vs-theta") {
        const auto theta_grid = grid_or(args.theta_spec, QuantityKind::angle, "--theta",
                                        polmix::linspace(0.0, polmix::pi / 2.0, 501));
        const double k = scalar_or(args.k_spec, QuantityKind::wavenumber, "--k", default_k);
        table = polmix::weights_vs_theta_table(cfg.model, k, theta_grid, convention, all_branches);
    } else {
        const double k = scalar_or(args.k_spec, QuantityKind::wavenumber, "--k", default_k);
        const double theta =
            scalar_or(args.theta_spec, QuantityKind::angle, "--theta", default_theta);
        const polmix::ProbePoint probe{k, theta};
        const auto omega_grid = grid_or(args.omega_spec, QuantityKind::frequency, "--omega",
                                        polmix::default_omega_grid(cfg.model, probe));
        if (args.spec == "spectra") {
            table = polmix::spectra_table(cfg.model, cfg.damping, probe, convention, drive,
                                          omega_grid);
        } else {
            table = polmix::phases_table(cfg.model, cfg.damping, probe, convention, drive,
                                         omega_grid, args.unwrap_phases);
        }
    }
    write_outputs(args.outdir, args.spec, table, cfg);
    return exit_ok;
}

int validate_command(const std::string& config_path) {
    const polmix::ConfigResult loaded = polmix::load_config_file(config_path);
    if (!loaded.ok()) return report_config_errors(loaded.errors);
    std::cout << polmix::describe_resolved(*loaded.config);
    return exit_ok;
}

int list_presets_command() {
    for (const auto& p : polmix::figure_presets())
        std::cout << p.id << (p.id.size() < 5 ? "   " : "  ") << p.description << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polariton branches and polarization-mixed linear spectra of an anisotropic "
                 "dipole lattice in a planar cavity"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "run a figure preset or a custom sweep");
    run->add_option("config", run_args.config_path, "JSON config file")->required();
    run->add_option("spec", run_args.spec, "preset id (fig4..fig19) or sweep kind")->required();
    run->add_option("outdir", run_args.outdir, "output directory")->required();
    run->add_option("--convention", run_args.convention, "dark-mode convention")
        ->check(CLI::IsMember({"orthonormal", "paper"}));
    run->add_flag("--unwrap-phases", run_args.unwrap_phases,
                  "add cumulative-unwrapped phase columns to custom phase sweeps");
    run->add_option("--paper-L", run_args.paper_L, "override mirror spacing L in meters")
        ->check(CLI::PositiveNumber);
    run->add_option("--k", run_args.k_spec, "k value or grid, value|start:stop:count[:unit]");
    run->add_option("--theta", run_args.theta_spec, "theta value or grid");
    run->add_option("--omega", run_args.omega_spec, "probe frequency grid");
    run->add_option("--drive", run_args.drive, "incident polarization")
        ->check(CLI::IsMember({"s", "p"}));

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "validate and echo a config");
    validate->add_option("config", validate_path, "JSON config file")->required();

    CLI::App* list = app.add_subcommand("list-presets", "list figure presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(run_args);
        if (validate->parsed()) return validate_command(validate_path);
        if (list->parsed()) return list_presets_command();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_ok;
}

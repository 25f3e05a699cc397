#pragma once

// JSON device configuration. The schema is strict: unknown keys are
// rejected so typos fail loudly, and validation reports every problem at
// once rather than the first. Frequencies enter as ordinary frequencies in
// Hz and are converted to angular internally; the dipole enters in
// e*angstrom and the lengths in meters.
//
// Schema:
//   omega_A_over_2pi_Hz   required, > 0
//   mu_eA                 required, >= 0
//   a_m                   required, > 0
//   L_m                   optional, > 0 (derived as c*pi/omega_A if absent)
//   m_index               optional integer >= 1, default 1
//   gamma_over_2pi_Hz     required, > 0 (identical mirrors)
//   Gamma_ex_over_2pi_Hz  required, >= 0

#include "polmix/model.hpp"
#include "polmix/spectra.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace polmix {

/// Fully resolved run configuration: SI-angular model values plus the
/// user-facing echo fields the sidecar re-emits.
struct SimulationConfig {
    ModelConfig model;
    DampingConfig damping;
    bool L_derived = false;

    double omega_A_over_2pi_Hz = 0.0;
    double mu_eA = 0.0;
    double a_m = 0.0;
    double L_m = 0.0;
    int m_index = 1;
    double gamma_over_2pi_Hz = 0.0;
    double Gamma_ex_over_2pi_Hz = 0.0;
};

struct ConfigResult {
    std::optional<SimulationConfig> config;
    std::vector<std::string> errors;

    bool ok() const { return errors.empty() && config.has_value(); }
};

namespace detail {

inline bool take_number(const nlohmann::json& j, const std::string& key, bool required,
                        std::vector<std::string>& errors, double& out, bool& present) {
    present = j.contains(key);
    if (!present) {
        if (required) errors.push_back("missing required key '" + key + "'");
        return false;
    }
    if (!j.at(key).is_number()) {
        errors.push_back("key '" + key + "' must be a number");
        return false;
    }
    out = j.at(key).get<double>();
    return true;
}

}  // namespace detail

inline ConfigResult parse_config_json(const nlohmann::json& j) {
    ConfigResult result;
    auto& errors = result.errors;

    if (!j.is_object()) {
        errors.push_back("config root must be a JSON object");
        return result;
    }

    static const std::set<std::string> known_keys = {
        "omega_A_over_2pi_Hz", "mu_eA", "a_m", "L_m",
        "m_index",             "gamma_over_2pi_Hz", "Gamma_ex_over_2pi_Hz"};
    for (const auto& item : j.items())
        if (!known_keys.contains(item.key()))
            errors.push_back("unknown key '" + item.key() + "'");

    SimulationConfig cfg;
    bool present = false;

    if (detail::take_number(j, "omega_A_over_2pi_Hz", true, errors, cfg.omega_A_over_2pi_Hz,
                            present) &&
        !(cfg.omega_A_over_2pi_Hz > 0.0))
        errors.push_back("key 'omega_A_over_2pi_Hz' must be > 0");

    if (detail::take_number(j, "mu_eA", true, errors, cfg.mu_eA, present) && !(cfg.mu_eA >= 0.0))
        errors.push_back("key 'mu_eA' must be >= 0");

    if (detail::take_number(j, "a_m", true, errors, cfg.a_m, present) && !(cfg.a_m > 0.0))
        errors.push_back("key 'a_m' must be > 0");

    bool L_present = false;
    if (detail::take_number(j, "L_m", false, errors, cfg.L_m, L_present) && !(cfg.L_m > 0.0))
        errors.push_back("key 'L_m' must be > 0");

    if (j.contains("m_index")) {
        if (!j.at("m_index").is_number_integer())
            errors.push_back("key 'm_index' must be an integer");
        else if (j.at("m_index").get<long long>() < 1)
            errors.push_back("key 'm_index' must be >= 1");
        else
            cfg.m_index = static_cast<int>(j.at("m_index").get<long long>());
    }

    if (detail::take_number(j, "gamma_over_2pi_Hz", true, errors, cfg.gamma_over_2pi_Hz,
                            present) &&
        !(cfg.gamma_over_2pi_Hz > 0.0))
        errors.push_back("key 'gamma_over_2pi_Hz' must be > 0");

    if (detail::take_number(j, "Gamma_ex_over_2pi_Hz", true, errors, cfg.Gamma_ex_over_2pi_Hz,
                            present) &&
        !(cfg.Gamma_ex_over_2pi_Hz >= 0.0))
        errors.push_back("key 'Gamma_ex_over_2pi_Hz' must be >= 0");

    if (!errors.empty()) return result;

    cfg.model.omega_A = hz_to_angular(cfg.omega_A_over_2pi_Hz);
    cfg.model.mu = e_angstrom_to_coulomb_m(cfg.mu_eA);
    cfg.model.a = cfg.a_m;
    cfg.model.m_index = cfg.m_index;
    if (L_present) {
        cfg.model.L = cfg.L_m;
        cfg.L_derived = false;
    } else {
        cfg.model.L = cfg.model.constants.c * pi / cfg.model.omega_A;
        cfg.L_m = cfg.model.L;
        cfg.L_derived = true;
    }
    cfg.damping =
        DampingConfig::symmetric(hz_to_angular(cfg.gamma_over_2pi_Hz),
                                 hz_to_angular(cfg.Gamma_ex_over_2pi_Hz));

    cfg.model.validate();
    cfg.damping.validate();
    result.config = cfg;
    return result;
}

inline ConfigResult load_config_file(const std::filesystem::path& path) {
    ConfigResult result;
    std::ifstream in(path);
    if (!in) {
        result.errors.push_back("cannot open config file '" + path.string() + "'");
        return result;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        result.errors.push_back(std::string("config is not valid JSON: ") + e.what());
        return result;
    }
    return parse_config_json(j);
}

/// The reproducibility sidecar: exactly the config schema with every default
/// materialized, so it can be fed back in as the config of an identical run.
inline nlohmann::json resolved_config_json(const SimulationConfig& cfg) {
    nlohmann::json j;
    j["omega_A_over_2pi_Hz"] = cfg.omega_A_over_2pi_Hz;
    j["mu_eA"] = cfg.mu_eA;
    j["a_m"] = cfg.a_m;
    j["L_m"] = cfg.L_m;
    j["m_index"] = cfg.m_index;
    j["gamma_over_2pi_Hz"] = cfg.gamma_over_2pi_Hz;
    j["Gamma_ex_over_2pi_Hz"] = cfg.Gamma_ex_over_2pi_Hz;
    return j;
}

/// Human-readable resolution report for the validate subcommand.
inline std::string describe_resolved(const SimulationConfig& cfg) {
    std::ostringstream os;
    os.precision(12);
    os << "omega_A/2pi = " << cfg.omega_A_over_2pi_Hz << " Hz  (" << cfg.model.omega_A
       << " rad/s)\n"
       << "mu          = " << cfg.mu_eA << " e*angstrom  (" << cfg.model.mu << " C m)\n"
       << "a           = " << cfg.a_m << " m\n"
       << "L           = " << cfg.L_m << " m" << (cfg.L_derived ? "  (derived: c*pi/omega_A)" : "")
       << "\n"
       << "m_index     = " << cfg.m_index << "\n"
       << "gamma/2pi   = " << cfg.gamma_over_2pi_Hz << " Hz  (" << cfg.damping.gamma()
       << " rad/s)\n"
       << "Gamma_ex/2pi = " << cfg.Gamma_ex_over_2pi_Hz << " Hz  (" << cfg.damping.Gamma_ex
       << " rad/s)\n";
    return os.str();
}

}  // namespace polmix

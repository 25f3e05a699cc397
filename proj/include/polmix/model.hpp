#pragma once

// Device parameters, the planar-cavity photon dispersion and the anisotropic
// excitation-photon coupling constants.
//
// Geometry: a 2D lattice of two-level emitters with a common in-plane
// transition dipole (along x) sits midway between planar mirrors spaced L
// apart. A cavity mode is labelled by the in-plane wavenumber k, the
// perpendicular index m and the polarization (s = TE, p = TM). The dipole
// couples to the s mode through sin(theta) and to the p mode through
// (omega_0/omega_k) cos(theta), where theta is the angle between the dipole
// and the in-plane unit vector of k.

#include "polmix/constants.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace polmix {

/// Physical parameters of the lattice + cavity device. SI units, angular
/// frequencies.
struct ModelConfig {
    double omega_A = 0.0;  ///< transition angular frequency, rad/s
    double mu = 0.0;       ///< transition dipole magnitude, C m
    double a = 0.0;        ///< lattice constant, m
    double L = 0.0;        ///< mirror spacing, m
    int m_index = 1;       ///< perpendicular mode number (model uses m = 1)
    PhysicalConstants constants{};

    /// k = 0 frequency of the m = 1 mode, omega_0 = c*pi/L.
    double omega_0() const { return constants.c * pi / L; }

    void validate() const {
        if (!(omega_A > 0.0)) throw std::invalid_argument("ModelConfig: omega_A must be > 0");
        if (!(mu >= 0.0)) throw std::invalid_argument("ModelConfig: mu must be >= 0");
        if (!(a > 0.0)) throw std::invalid_argument("ModelConfig: a must be > 0");
        if (!(L > 0.0)) throw std::invalid_argument("ModelConfig: L must be > 0");
        if (m_index < 1) throw std::invalid_argument("ModelConfig: m_index must be >= 1");
    }

    /// Mirror spacing chosen so the (k = 0, m = 1) mode is exactly resonant
    /// with the transition: L = c*pi/omega_A.
    static ModelConfig resonant(double omega_A, double mu, double a, int m_index = 1,
                                PhysicalConstants constants = {}) {
        ModelConfig cfg;
        cfg.omega_A = omega_A;
        cfg.mu = mu;
        cfg.a = a;
        cfg.L = constants.c * pi / omega_A;
        cfg.m_index = m_index;
        cfg.constants = constants;
        cfg.validate();
        return cfg;
    }
};

/// One evaluation point: in-plane wavenumber magnitude and dipole angle.
struct ProbePoint {
    double k = 0.0;      ///< |k|, 1/m
    double theta = 0.0;  ///< dipole-to-e_k angle, rad (enters via sin/cos only)
};

/// Coupling constants at one probe point. f_s is purely imaginary and f_p
/// real for a real in-plane dipole; both are stored as complex so nothing
/// downstream relies on that.
struct CouplingSet {
    double omega_k = 0.0;               ///< cavity photon frequency, rad/s
    double delta_k = 0.0;               ///< (omega_k - omega_A) / 2, rad/s
    double C_k = 0.0;                   ///< coupling energy scale, J
    std::complex<double> f_s{0.0, 0.0}; ///< TE coupling, rad/s
    std::complex<double> f_p{0.0, 0.0}; ///< TM coupling, rad/s
    double f_abs = 0.0;                 ///< sqrt(|f_s|^2 + |f_p|^2), rad/s

    double f_abs2() const { return f_abs * f_abs; }
};

/// Cavity photon dispersion omega = c * sqrt(k^2 + (m*pi/L)^2).
/// m = 0 is outside the modeled scope (only m = 1 modes are close to
/// resonance and the m = 0 TM normalization differs).
inline double cavity_dispersion(const ModelConfig& cfg, double k, int m) {
    if (m < 1)
        throw std::invalid_argument("cavity_dispersion: perpendicular mode index must be >= 1");
    if (!(k >= 0.0)) throw std::invalid_argument("cavity_dispersion: k must be >= 0");
    const double kz = static_cast<double>(m) * pi / cfg.L;
    return cfg.constants.c * std::sqrt(k * k + kz * kz);
}

inline double cavity_dispersion(const ModelConfig& cfg, double k) {
    return cavity_dispersion(cfg, k, cfg.m_index);
}

/// Coupling energy scale C_k = sqrt(hbar * omega_k * mu^2 / (L a^2 eps0)).
inline double coupling_scale(const ModelConfig& cfg, double omega_k) {
    if (!(omega_k > 0.0)) throw std::invalid_argument("coupling_scale: omega_k must be > 0");
    const auto& pc = cfg.constants;
    return std::sqrt(pc.hbar * omega_k * cfg.mu * cfg.mu / (cfg.L * cfg.a * cfg.a * pc.eps0));
}

/// Both polarization couplings and the detuning at a probe point:
///   f_s = i (C_k/hbar) sin(theta)
///   f_p =   (C_k/hbar) (omega_0/omega_k) cos(theta)
inline CouplingSet coupling_constants(const ModelConfig& cfg, const ProbePoint& p) {
    cfg.validate();
    CouplingSet cs;
    cs.omega_k = cavity_dispersion(cfg, p.k, cfg.m_index);
    cs.delta_k = 0.5 * (cs.omega_k - cfg.omega_A);
    cs.C_k = coupling_scale(cfg, cs.omega_k);
    const double rate = cs.C_k / cfg.constants.hbar;  // rad/s
    // snap sin/cos below 1e-15 to zero so the exact polarization nodes at
    // the cardinal angles survive in floating point (cos(pi/2) ~ 6e-17)
    double sin_theta = std::sin(p.theta);
    double cos_theta = std::cos(p.theta);
    if (std::abs(sin_theta) < 1e-15) sin_theta = 0.0;
    if (std::abs(cos_theta) < 1e-15) cos_theta = 0.0;
    cs.f_s = std::complex<double>(0.0, rate * sin_theta);
    cs.f_p = std::complex<double>(rate * (cfg.omega_0() / cs.omega_k) * cos_theta, 0.0);
    cs.f_abs = std::sqrt(std::norm(cs.f_s) + std::norm(cs.f_p));
    return cs;
}

}  // namespace polmix

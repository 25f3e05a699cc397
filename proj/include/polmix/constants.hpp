#pragma once

// Physical constants (CODATA 2018, SI) and unit conversions.
//
// Convention used throughout the library: every frequency-like quantity is
// angular (rad/s) internally. User-facing I/O (config files, CSV columns)
// uses ordinary frequency in Hz, i.e. omega / 2pi.

#include <numbers>

namespace polmix {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * pi;

// Constants entering the model equations. Overridable so tests can pin
// simplified values; defaults are CODATA 2018.
struct PhysicalConstants {
    double c = 2.99792458e8;         // speed of light, m/s (exact)
    double hbar = 1.054571817e-34;   // reduced Planck constant, J s
    double eps0 = 8.8541878128e-12;  // vacuum permittivity, F/m
};

inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)
inline constexpr double angstrom = 1e-10;                     // m

// Frequency: ordinary (Hz) <-> angular (rad/s).
constexpr double hz_to_angular(double hz) { return two_pi * hz; }
constexpr double angular_to_hz(double omega) { return omega / two_pi; }

// In-plane wavenumber: 1/angstrom <-> 1/m.
constexpr double per_angstrom_to_per_m(double k) { return k / angstrom; }
constexpr double per_m_to_per_angstrom(double k) { return k * angstrom; }

// Transition dipole: e*angstrom <-> C*m.
constexpr double e_angstrom_to_coulomb_m(double mu) {
    return mu * (elementary_charge * angstrom);
}
constexpr double coulomb_m_to_e_angstrom(double mu) {
    return mu / (elementary_charge * angstrom);
}

constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

}  // namespace polmix

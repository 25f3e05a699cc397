#pragma once

// The one-excitation block of the coupled excitation/photon Hamiltonian at a
// fixed in-plane wavenumber spans {excitation, s photon, p photon}. Its
// closed-form diagonalization gives three polariton branches:
//
//   Omega_+- = (omega_k + omega_A)/2 +- Delta_k,   Omega_0 = omega_k,
//   Delta_k  = sqrt(delta_k^2 + |f|^2),
//
// with amplitude rows (X_r, Y_r^s, Y_r^p). The middle branch carries no
// excitation (X_0 = 0): one photon superposition decouples from the dipole.
//
// Two conventions are provided for the dark (middle) branch photon vector:
//   orthonormal  (Y_0^s, Y_0^p) = (f_p*, -f_s*)/|f|, the superposition with
//                Y_0^s f_s* + Y_0^p f_p* = 0; the 3x3 amplitude matrix is
//                unitary and the photon operators invert cleanly.
//   paper        (Y_0^s, Y_0^p) = (f_s, f_p)/|f|, parallel to the coupling
//                vector; kept verbatim to reproduce figure sets computed
//                with it, although the amplitude matrix is then not unitary.
//
// diagonalize_oracle() is a numeric cross-check of the closed forms through
// the cyclic-Jacobi eigensolver; it never shares code with them.

#include "polmix/jacobi.hpp"
#include "polmix/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace polmix {

enum class Branch : int { upper = 0, middle = 1, lower = 2 };

enum class DarkModeConvention { orthonormal, paper };

/// |f| below degenerate_coupling_epsilon * omega_A counts as uncoupled: the
/// +- mixing formulas hit 0/0 there and the decoupled assignment applies.
inline constexpr double degenerate_coupling_epsilon = 1e-14;

struct degenerate_coupling_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Three polariton branches at one probe point.
struct PolaritonModes {
    std::array<double, 3> omega{};  ///< branch frequencies, rad/s, descending
    double Delta_k = 0.0;           ///< sqrt(delta_k^2 + |f|^2), rad/s
    /// amplitude[r] = (X_r, Y_r^s, Y_r^p) for r in {upper, middle, lower}
    std::array<std::array<std::complex<double>, 3>, 3> amplitude{};
    DarkModeConvention convention = DarkModeConvention::orthonormal;

    double frequency(Branch r) const { return omega[static_cast<int>(r)]; }
    std::complex<double> X(Branch r) const { return amplitude[static_cast<int>(r)][0]; }
    std::complex<double> Y_s(Branch r) const { return amplitude[static_cast<int>(r)][1]; }
    std::complex<double> Y_p(Branch r) const { return amplitude[static_cast<int>(r)][2]; }

    double excitation_weight(Branch r) const { return std::norm(X(r)); }
    double photon_weight_s(Branch r) const { return std::norm(Y_s(r)); }
    double photon_weight_p(Branch r) const { return std::norm(Y_p(r)); }
};

/// Closed-form branch frequencies (Omega_+, Omega_0, Omega_-), descending.
inline std::array<double, 3> eigenfrequencies(const CouplingSet& cs, double omega_A) {
    const double mean = 0.5 * (cs.omega_k + omega_A);
    const double Delta = std::sqrt(cs.delta_k * cs.delta_k + cs.f_abs2());
    return {mean + Delta, cs.omega_k, mean - Delta};
}

/// Branch assignment when the coupling vanishes: one pure excitation row and
/// the two bare photon rows, ordered by descending frequency with ties
/// resolved as {excitation, s photon, p photon}.
inline PolaritonModes decoupled_modes(const CouplingSet& cs, double omega_A) {
    struct Entry {
        double omega;
        int basis;  // 0 excitation, 1 s photon, 2 p photon
    };
    std::array<Entry, 3> entries{{{omega_A, 0}, {cs.omega_k, 1}, {cs.omega_k, 2}}};
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& l, const Entry& r) { return l.omega > r.omega; });

    PolaritonModes modes;
    modes.Delta_k = std::sqrt(cs.delta_k * cs.delta_k + cs.f_abs2());
    for (int r = 0; r < 3; ++r) {
        modes.omega[r] = entries[r].omega;
        modes.amplitude[r][entries[r].basis] = 1.0;
    }
    return modes;
}

/// Closed-form Hopfield amplitudes:
///   X_+- = +-sqrt((Delta -+ delta) / (2 Delta))
///   Y_+-^nu = f^nu / sqrt(2 Delta (Delta -+ delta))
/// plus the dark middle branch per the chosen convention (its residual
/// global phase is fixed by rotating the first nonzero component onto the
/// nonnegative real axis). Throws degenerate_coupling_error when |f| is too
/// small for the mixing formulas; use decoupled_modes() then.
inline PolaritonModes hopfield_amplitudes(const CouplingSet& cs, double omega_A,
                                          DarkModeConvention convention =
                                              DarkModeConvention::orthonormal) {
    if (cs.f_abs <= degenerate_coupling_epsilon * omega_A)
        throw degenerate_coupling_error(
            "hopfield_amplitudes: |f| below the degeneracy threshold; "
            "use the decoupled branch assignment");

    const double delta = cs.delta_k;
    const double Delta = std::sqrt(delta * delta + cs.f_abs2());

    PolaritonModes modes;
    modes.convention = convention;
    modes.Delta_k = Delta;
    const double mean = 0.5 * (cs.omega_k + omega_A);
    modes.omega = {mean + Delta, cs.omega_k, mean - Delta};

    // Delta -+ delta via |f|^2 = (Delta - delta)(Delta + delta); the direct
    // subtraction cancels catastrophically when |f| << |delta|.
    double dm, dp;  // Delta - delta, Delta + delta
    if (delta >= 0.0) {
        dp = Delta + delta;
        dm = cs.f_abs2() / dp;
    } else {
        dm = Delta - delta;
        dp = cs.f_abs2() / dm;
    }

    const double denom_up = std::sqrt(2.0 * Delta * dm);
    const double denom_lo = std::sqrt(2.0 * Delta * dp);

    auto& up = modes.amplitude[static_cast<int>(Branch::upper)];
    up[0] = std::sqrt(dm / (2.0 * Delta));
    up[1] = cs.f_s / denom_up;
    up[2] = cs.f_p / denom_up;

    auto& lo = modes.amplitude[static_cast<int>(Branch::lower)];
    lo[0] = -std::sqrt(dp / (2.0 * Delta));
    lo[1] = cs.f_s / denom_lo;
    lo[2] = cs.f_p / denom_lo;

    auto& mid = modes.amplitude[static_cast<int>(Branch::middle)];
    mid[0] = 0.0;
    if (convention == DarkModeConvention::orthonormal) {
        mid[1] = std::conj(cs.f_p) / cs.f_abs;
        mid[2] = -std::conj(cs.f_s) / cs.f_abs;
        fix_vector_phase(mid);
    } else {
        mid[1] = cs.f_s / cs.f_abs;
        mid[2] = cs.f_p / cs.f_abs;
    }
    return modes;
}

/// hopfield_amplitudes with the degenerate-coupling fallback applied.
inline PolaritonModes branch_modes(const CouplingSet& cs, double omega_A,
                                   DarkModeConvention convention =
                                       DarkModeConvention::orthonormal) {
    if (cs.f_abs <= degenerate_coupling_epsilon * omega_A) return decoupled_modes(cs, omega_A);
    return hopfield_amplitudes(cs, omega_A, convention);
}

/// Independent verification path for the closed forms: assembles the 3x3
/// Hermitian block
///   [[omega_A, f_s, f_p], [f_s*, omega_k, 0], [f_p*, 0, omega_k]]
/// in the basis (excitation, s photon, p photon) and diagonalizes it with
/// the cyclic Jacobi solver. Rows are phase-fixed and sorted descending.
inline PolaritonModes diagonalize_oracle(const CouplingSet& cs, double omega_A) {
    HermitianMatrix<3> H{};
    H[0][0] = omega_A;
    H[0][1] = cs.f_s;
    H[0][2] = cs.f_p;
    H[1][0] = std::conj(cs.f_s);
    H[1][1] = cs.omega_k;
    H[2][0] = std::conj(cs.f_p);
    H[2][2] = cs.omega_k;

    const EigenSystem<3> eig = jacobi_hermitian(H);

    PolaritonModes modes;
    modes.Delta_k = std::sqrt(cs.delta_k * cs.delta_k + cs.f_abs2());
    modes.omega = eig.values;
    modes.amplitude = eig.vectors;
    return modes;
}

/// Dispersive-regime branch shifts, valid for |delta_k| >> |f|:
///   photon-like branch  ~ omega_k + |f|^2 / (2 |delta|)  (pushed away)
///   matter-like branch  ~ omega_A - |f|^2 / (2 |delta|)
/// returned as (upper, lower) frequencies. Error is O(|f|^4 / delta^3).
struct DispersiveShift {
    double upper = 0.0;
    double lower = 0.0;
};

inline DispersiveShift large_detuning_approx(const CouplingSet& cs, double omega_A) {
    if (cs.delta_k == 0.0)
        throw std::domain_error("large_detuning_approx: delta_k must be nonzero");
    const double shift = cs.f_abs2() / (2.0 * std::abs(cs.delta_k));
    DispersiveShift out;
    out.upper = std::max(cs.omega_k, omega_A) + shift;
    out.lower = std::min(cs.omega_k, omega_A) - shift;
    return out;
}

}  // namespace polmix

#pragma once

// Linear optical response through lossy mirrors (input-output treatment).
//
// The cavity couples to external fields above (b) and below (c) through
// Markovian mirror rates gamma_U = 2 pi u^2 and gamma_L = 2 pi v^2, with
// gamma = (gamma_U + gamma_L)/2. The excitation decays at Gamma_ex, giving
// each branch the phenomenological width Gamma_r = Gamma_ex |X_r|^2 and the
// complex frequency Obar_r = Omega_r - i Gamma_r.
//
// In frequency space the intracavity polarization amplitudes obey
//
//   (I + gamma Lambda) a = Lambda (sqrt(gamma_U) b_in + sqrt(gamma_L) c_in),
//   Lambda_ab(omega) = i sum_r Y_a^{r*} Y_b^r / (omega - Obar_r),
//
// with the mirror boundary relations
//
//   sqrt(gamma_U) a = b_in + b_out,   sqrt(gamma_L) a = c_in + c_out.
//
// solve_scattering() solves this 2x2 complex system directly for arbitrary
// rates and two-sided drive; solve_scattering_closed_form() transcribes the
// reduced identical-mirror, top-drive solution and serves as a cross-check.

#include "polmix/polariton.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace polmix {

struct DampingConfig {
    double gamma_U = 0.0;    ///< upper-mirror damping rate, rad/s
    double gamma_L = 0.0;    ///< lower-mirror damping rate, rad/s
    double Gamma_ex = 0.0;   ///< excitation damping rate, rad/s

    double gamma() const { return 0.5 * (gamma_U + gamma_L); }

    static DampingConfig symmetric(double gamma, double Gamma_ex) {
        return DampingConfig{gamma, gamma, Gamma_ex};
    }

    void validate() const {
        if (!(gamma_U >= 0.0) || !(gamma_L >= 0.0))
            throw std::invalid_argument("DampingConfig: mirror rates must be >= 0");
        if (!(gamma() > 0.0))
            throw std::invalid_argument("DampingConfig: combined mirror rate must be > 0");
        if (!(Gamma_ex >= 0.0))
            throw std::invalid_argument("DampingConfig: Gamma_ex must be >= 0");
    }
};

/// Branch complex frequencies Obar_r = Omega_r - i Gamma_ex |X_r|^2. The
/// middle branch carries no excitation, so it stays undamped.
struct ComplexBranches {
    std::array<std::complex<double>, 3> omega_bar{};
};

inline ComplexBranches complex_branches(const PolaritonModes& modes, const DampingConfig& d) {
    ComplexBranches cb;
    for (int r = 0; r < 3; ++r) {
        const double width = d.Gamma_ex * std::norm(modes.amplitude[r][0]);
        cb.omega_bar[r] = std::complex<double>(modes.omega[r], -width);
    }
    return cb;
}

/// 2x2 polarization response kernel, indices (s, p), units 1/(rad/s).
struct LambdaMatrix {
    std::complex<double> ss{}, sp{}, ps{}, pp{};
};

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Lambda_ab = i sum_r Y_a^{r*} Y_b^r / (omega - Obar_r).
///
/// An undamped branch with photon weight puts a real pole on the omega axis;
/// evaluation closer than pole_guard (rad/s) to such a pole throws
/// pole_error so the caller can re-sample. pole_guard = 0 disables the
/// check.
inline LambdaMatrix lambda_matrix(const ComplexBranches& cb, const PolaritonModes& modes,
                                  double omega, double pole_guard = 0.0) {
    LambdaMatrix lambda;
    const std::complex<double> i_unit(0.0, 1.0);
    for (int r = 0; r < 3; ++r) {
        const std::complex<double> ys = modes.amplitude[r][1];
        const std::complex<double> yp = modes.amplitude[r][2];
        if (pole_guard > 0.0 && cb.omega_bar[r].imag() == 0.0 &&
            std::norm(ys) + std::norm(yp) > 0.0 &&
            std::abs(omega - cb.omega_bar[r].real()) < pole_guard)
            throw pole_error("lambda_matrix: probe frequency on an undamped branch pole");
        const std::complex<double> denom = omega - cb.omega_bar[r];
        lambda.ss += i_unit * std::conj(ys) * ys / denom;
        lambda.sp += i_unit * std::conj(ys) * yp / denom;
        lambda.ps += i_unit * std::conj(yp) * ys / denom;
        lambda.pp += i_unit * std::conj(yp) * yp / denom;
    }
    return lambda;
}

/// External drive amplitudes entering at the upper mirror; the lower-mirror
/// input is zero in the standard transmission geometry.
struct IncidentField {
    std::complex<double> b_s{};
    std::complex<double> b_p{};
};

/// Drive through both mirrors (general case).
struct DriveAmplitudes {
    std::complex<double> b_s{}, b_p{};  // upper mirror inputs
    std::complex<double> c_s{}, c_p{};  // lower mirror inputs
};

struct ScatteringAmplitudes {
    std::complex<double> a_s{}, a_p{};          // intracavity amplitudes
    std::complex<double> b_out_s{}, b_out_p{};  // upper-mirror outputs
    std::complex<double> c_out_s{}, c_out_p{};  // lower-mirror outputs
};

struct singular_system_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// General solve: (I + gamma Lambda) a = Lambda (sqrt(gamma_U) b_in +
/// sqrt(gamma_L) c_in), outputs from the boundary relations.
inline ScatteringAmplitudes solve_scattering(const LambdaMatrix& lambda, const DampingConfig& d,
                                             const DriveAmplitudes& drive) {
    const double gamma = d.gamma();
    const double su = std::sqrt(d.gamma_U);
    const double sl = std::sqrt(d.gamma_L);

    const std::complex<double> in_s = su * drive.b_s + sl * drive.c_s;
    const std::complex<double> in_p = su * drive.b_p + sl * drive.c_p;
    const std::complex<double> rhs_s = lambda.ss * in_s + lambda.sp * in_p;
    const std::complex<double> rhs_p = lambda.ps * in_s + lambda.pp * in_p;

    const std::complex<double> m_ss = 1.0 + gamma * lambda.ss;
    const std::complex<double> m_sp = gamma * lambda.sp;
    const std::complex<double> m_ps = gamma * lambda.ps;
    const std::complex<double> m_pp = 1.0 + gamma * lambda.pp;
    const std::complex<double> det = m_ss * m_pp - m_sp * m_ps;
    if (std::abs(det) < 1e-300)
        throw singular_system_error("solve_scattering: singular response system");

    ScatteringAmplitudes out;
    out.a_s = (rhs_s * m_pp - m_sp * rhs_p) / det;
    out.a_p = (m_ss * rhs_p - m_ps * rhs_s) / det;
    out.b_out_s = su * out.a_s - drive.b_s;
    out.b_out_p = su * out.a_p - drive.b_p;
    out.c_out_s = sl * out.a_s - drive.c_s;
    out.c_out_p = sl * out.a_p - drive.c_p;
    return out;
}

inline ScatteringAmplitudes solve_scattering(const LambdaMatrix& lambda, const DampingConfig& d,
                                             const IncidentField& inc) {
    return solve_scattering(lambda, d, DriveAmplitudes{inc.b_s, inc.b_p, 0.0, 0.0});
}

/// Transcription of the reduced solution for identical mirrors and s-only
/// top drive:
///   c_out^s / b_in^s = [gamma Lss (1 + gamma Lpp) - gamma^2 Lsp Lps] / D
///   c_out^p / b_in^s = b_out^p / b_in^s = gamma Lps / D
///   b_out^s / b_in^s = -(1 + gamma Lpp) / D
///   D = (1 + gamma Lss)(1 + gamma Lpp) - gamma^2 Lsp Lps
inline ScatteringAmplitudes solve_scattering_closed_form(const LambdaMatrix& lambda, double gamma,
                                                         std::complex<double> b_in_s) {
    const std::complex<double> one(1.0, 0.0);
    const std::complex<double> D = (one + gamma * lambda.ss) * (one + gamma * lambda.pp) -
                                   gamma * gamma * lambda.sp * lambda.ps;
    if (std::abs(D) < 1e-300)
        throw singular_system_error("solve_scattering_closed_form: singular response system");

    ScatteringAmplitudes out;
    out.c_out_s = b_in_s *
                  (gamma * lambda.ss * (one + gamma * lambda.pp) -
                   gamma * gamma * lambda.sp * lambda.ps) /
                  D;
    out.c_out_p = b_in_s * gamma * lambda.ps / D;
    out.b_out_p = out.c_out_p;
    out.b_out_s = b_in_s * (-(one + gamma * lambda.pp)) / D;
    const double sg = std::sqrt(gamma);
    out.a_s = out.c_out_s / sg;
    out.a_p = out.c_out_p / sg;
    return out;
}

/// All observables at one probe frequency.
struct SpectraPoint {
    double omega = 0.0;  ///< probe frequency actually evaluated, rad/s
    double T_s = 0.0, T_p = 0.0, R_s = 0.0, R_p = 0.0;
    double A = 0.0;  ///< absorption, defined by 1 - T_s - T_p - R_s - R_p
    double phase_t_s = 0.0, phase_t_p = 0.0;  ///< transmitted phases, (-pi, pi]
    double phase_r_s = 0.0, phase_r_p = 0.0;  ///< reflected phases, (-pi, pi]
    double I_s = 0.0, I_p = 0.0;  ///< intracavity photon number per incident photon flux
    bool pole_shifted = false;    ///< probe was nudged off an undamped pole
};

/// Principal-value argument mapped onto (-pi, pi].
inline double principal_phase(std::complex<double> z) {
    double phase = std::arg(z);
    if (phase <= -pi) phase += two_pi;
    return phase;
}

/// Intensities, phases and intracavity photon numbers from the scattering
/// amplitudes. Intensities are normalized to the total incident flux; the
/// phase reference is the driven component (the larger one, s on ties).
inline SpectraPoint observables(const ScatteringAmplitudes& amps, const IncidentField& inc,
                                const DampingConfig&, double omega) {
    const double flux_in = std::norm(inc.b_s) + std::norm(inc.b_p);
    if (!(flux_in > 0.0))
        throw std::invalid_argument("observables: incident field must be nonzero");
    const std::complex<double> ref =
        (std::norm(inc.b_s) >= std::norm(inc.b_p)) ? inc.b_s : inc.b_p;

    SpectraPoint pt;
    pt.omega = omega;
    pt.T_s = std::norm(amps.c_out_s) / flux_in;
    pt.T_p = std::norm(amps.c_out_p) / flux_in;
    pt.R_s = std::norm(amps.b_out_s) / flux_in;
    pt.R_p = std::norm(amps.b_out_p) / flux_in;
    // deficit of the identity; grouped so the sum is invariant under the
    // s <-> p label exchange
    pt.A = 1.0 - ((pt.T_s + pt.T_p) + (pt.R_s + pt.R_p));
    pt.phase_t_s = principal_phase(amps.c_out_s * std::conj(ref));
    pt.phase_t_p = principal_phase(amps.c_out_p * std::conj(ref));
    pt.phase_r_s = principal_phase(amps.b_out_s * std::conj(ref));
    pt.phase_r_p = principal_phase(amps.b_out_p * std::conj(ref));
    pt.I_s = std::norm(amps.a_s) / flux_in;
    pt.I_p = std::norm(amps.a_p) / flux_in;
    return pt;
}

/// One full evaluation at a single probe frequency (no pole re-sampling).
inline SpectraPoint spectra_point(const PolaritonModes& modes, const DampingConfig& d,
                                  const IncidentField& inc, double omega,
                                  double pole_guard = 0.0) {
    const ComplexBranches cb = complex_branches(modes, d);
    const LambdaMatrix lambda = lambda_matrix(cb, modes, omega, pole_guard);
    return observables(solve_scattering(lambda, d, inc), inc, d, omega);
}

/// Real pole positions of the response kernel: undamped branches that carry
/// photon weight.
inline std::vector<double> undamped_pole_frequencies(const PolaritonModes& modes,
                                                     const DampingConfig& d) {
    const ComplexBranches cb = complex_branches(modes, d);
    std::vector<double> poles;
    for (int r = 0; r < 3; ++r) {
        const double photon_weight =
            std::norm(modes.amplitude[r][1]) + std::norm(modes.amplitude[r][2]);
        if (cb.omega_bar[r].imag() == 0.0 && photon_weight > 0.0)
            poles.push_back(cb.omega_bar[r].real());
    }
    return poles;
}

/// Sweep over a strictly increasing probe-frequency grid. A grid point that
/// lands within 1e-3 * gamma of an undamped branch pole is shifted up by one
/// grid step and flagged in the output.
inline std::vector<SpectraPoint> spectrum_sweep(const PolaritonModes& modes,
                                                const DampingConfig& d, const IncidentField& inc,
                                                std::span<const double> omega_grid) {
    if (omega_grid.size() < 2)
        throw std::invalid_argument("spectrum_sweep: need at least 2 grid points");
    for (std::size_t i = 0; i + 1 < omega_grid.size(); ++i)
        if (!(omega_grid[i] < omega_grid[i + 1]))
            throw std::invalid_argument("spectrum_sweep: omega grid must be strictly increasing");

    const double guard = 1e-3 * d.gamma();
    std::vector<SpectraPoint> points;
    points.reserve(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        const double step = (i + 1 < omega_grid.size())
                                ? omega_grid[i + 1] - omega_grid[i]
                                : omega_grid[i] - omega_grid[i - 1];
        double omega = omega_grid[i];
        bool shifted = false;
        for (int attempt = 0; attempt < 4; ++attempt) {
            try {
                SpectraPoint pt = spectra_point(modes, d, inc, omega, guard);
                pt.pole_shifted = shifted;
                points.push_back(pt);
                break;
            } catch (const pole_error&) {
                if (attempt == 3) throw;
                omega += step;
                shifted = true;
            }
        }
    }
    return points;
}

/// Convenience: probe point -> couplings -> branches -> sweep.
inline std::vector<SpectraPoint> spectrum_sweep(const ModelConfig& cfg, const ProbePoint& p,
                                                const DampingConfig& d, const IncidentField& inc,
                                                std::span<const double> omega_grid,
                                                DarkModeConvention convention =
                                                    DarkModeConvention::orthonormal) {
    d.validate();
    const CouplingSet cs = coupling_constants(cfg, p);
    const PolaritonModes modes = branch_modes(cs, cfg.omega_A, convention);
    return spectrum_sweep(modes, d, inc, omega_grid);
}

}  // namespace polmix

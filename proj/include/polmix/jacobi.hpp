#pragma once

// Cyclic Jacobi eigensolver for small dense complex Hermitian matrices.
//
// Each sweep annihilates every off-diagonal pair (p, q) with a complex
// Givens rotation; convergence is quadratic once the matrix is nearly
// diagonal. Meant for the tiny fixed-size blocks used in this library, not
// as a general-purpose LAPACK replacement.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>

namespace polmix {

template <std::size_t N>
using HermitianMatrix = std::array<std::array<std::complex<double>, N>, N>;

template <std::size_t N>
struct EigenSystem {
    std::array<double, N> values{};  // descending
    // vectors[r] is the orthonormal eigenvector for values[r], stored as a
    // row, phase-fixed so its first non-negligible entry is real >= 0.
    std::array<std::array<std::complex<double>, N>, N> vectors{};
};

/// Rotates a global phase onto a vector so that its first component of
/// non-negligible magnitude becomes real and nonnegative.
template <std::size_t N>
inline void fix_vector_phase(std::array<std::complex<double>, N>& v) {
    double scale = 0.0;
    for (const auto& z : v) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return;
    for (const auto& z : v) {
        if (std::abs(z) > 1e-12 * scale) {
            const std::complex<double> phase = std::conj(z) / std::abs(z);
            for (auto& w : v) w *= phase;
            return;
        }
    }
}

template <std::size_t N>
EigenSystem<N> jacobi_hermitian(HermitianMatrix<N> A, int max_sweeps = 60) {
    static_assert(N >= 1);

    // V accumulates the rotations; its columns end up as eigenvectors.
    std::array<std::array<std::complex<double>, N>, N> V{};
    for (std::size_t i = 0; i < N; ++i) V[i][i] = 1.0;

    double norm = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) norm += std::norm(A[i][j]);
    norm = std::sqrt(norm);
    const double tol = (norm > 0.0) ? 1e-15 * norm : 0.0;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) off += std::norm(A[p][q]);
        if (std::sqrt(2.0 * off) <= tol) break;

        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const std::complex<double> apq = A[p][q];
                const double abs_apq = std::abs(apq);
                if (abs_apq <= tol * 1e-2) continue;

                // Unitary rotation U: U_pp = c, U_pq = s e^{i phi},
                // U_qp = -s e^{-i phi}, U_qq = c with e^{i phi} = apq/|apq|;
                // A <- U^dagger A U zeroes A_pq.
                const std::complex<double> phase = apq / abs_apq;
                const double tau = (A[q][q].real() - A[p][p].real()) / (2.0 * abs_apq);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const double app = A[p][p].real();
                const double aqq = A[q][q].real();
                A[p][p] = c * c * app + s * s * aqq - 2.0 * c * s * abs_apq;
                A[q][q] = s * s * app + c * c * aqq + 2.0 * c * s * abs_apq;
                A[p][q] = 0.0;
                A[q][p] = 0.0;

                for (std::size_t j = 0; j < N; ++j) {
                    if (j == p || j == q) continue;
                    const std::complex<double> ajp = A[j][p];
                    const std::complex<double> ajq = A[j][q];
                    A[j][p] = c * ajp - s * std::conj(phase) * ajq;
                    A[j][q] = s * phase * ajp + c * ajq;
                    A[p][j] = std::conj(A[j][p]);
                    A[q][j] = std::conj(A[j][q]);
                }
                for (std::size_t j = 0; j < N; ++j) {
                    const std::complex<double> vjp = V[j][p];
                    const std::complex<double> vjq = V[j][q];
                    V[j][p] = c * vjp - s * std::conj(phase) * vjq;
                    V[j][q] = s * phase * vjp + c * vjq;
                }
            }
        }
    }

    EigenSystem<N> result;
    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::array<double, N> diag{};
    for (std::size_t i = 0; i < N; ++i) diag[i] = A[i][i].real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t lhs, std::size_t rhs) { return diag[lhs] > diag[rhs]; });

    for (std::size_t r = 0; r < N; ++r) {
        result.values[r] = diag[order[r]];
        for (std::size_t j = 0; j < N; ++j) result.vectors[r][j] = V[j][order[r]];
        fix_vector_phase(result.vectors[r]);
    }
    return result;
}

}  // namespace polmix

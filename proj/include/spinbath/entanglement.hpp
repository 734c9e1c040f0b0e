// entanglement.hpp — Wootters concurrence for two-qubit density matrices.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "spinbath/linalg.hpp"

namespace spinbath {

struct ConcurrenceResult {
    double value;                          // max(0, s1 - s2 - s3 - s4)
    std::array<double, 4> sqrt_eigenvalues; // descending, nonnegative
};

// rho_tilde = (sigma_y ⊗ sigma_y) conj(rho) (sigma_y ⊗ sigma_y)
inline Matrix spin_flip(const Matrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw std::invalid_argument("spin_flip: expected a 4x4 two-qubit state");
    }
    const Matrix yy = kron(sigma_y(), sigma_y());
    return yy * rho.conjugate() * yy;
}

// s_i are the square roots of the eigenvalues of rho * rho_tilde. With
// rho = X X† (X = eigenvectors scaled by sqrt-eigenvalues) they equal the
// singular values of the complex symmetric matrix Xᵀ (σ_y⊗σ_y) X. The SVD
// route keeps near-zero s_i at machine precision; squaring through the
// spectrum of rho·rho_tilde would inflate them to sqrt(eps).
inline ConcurrenceResult concurrence(const Matrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw std::invalid_argument("concurrence: expected a 4x4 two-qubit state");
    }

    const Matrix herm = 0.5 * (rho + rho.adjoint());
    const HermEigDecomp d = herm_eig(herm);

    Matrix x = d.eigenvectors;
    for (int i = 0; i < 4; ++i) {
        const double ev = d.eigenvalues(i);
        if (ev < -1e-10) {
            throw std::runtime_error("concurrence: state eigenvalue negative beyond tolerance");
        }
        x.col(i) *= std::sqrt(std::max(ev, 0.0));
    }

    const Matrix yy = kron(sigma_y(), sigma_y());
    const Matrix tau = x.transpose() * yy * x;
    Eigen::JacobiSVD<Matrix> svd(tau);

    std::array<double, 4> s{};
    for (int i = 0; i < 4; ++i) s[i] = svd.singularValues()(i);
    std::sort(s.begin(), s.end(), std::greater<double>());

    const double c = s[0] - s[1] - s[2] - s[3];
    return {std::max(0.0, c), s};
}

} // namespace spinbath

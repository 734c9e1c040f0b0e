// states.hpp — Initial states: pure two-qubit system states and Gibbs thermal
// bath states, assembled into the full-register product state.

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "spinbath/linalg.hpp"

namespace spinbath {

enum class SystemStateKind { bell, partial, partial_perturbed, custom };

struct SystemStateSpec {
    SystemStateKind kind = SystemStateKind::bell;
    double alpha = std::numbers::pi / 2;  // radians
    double delta = 0.0;                   // radians
    double epsilon = 0.1;                 // perturbation amplitude
    std::optional<Vector> custom_amplitudes; // 4-vector, normalized on use

    static SystemStateSpec bell() { return {}; }

    // cos(alpha/2) = sqrt(3)/2, relative phase pi/4.
    static SystemStateSpec partial() {
        SystemStateSpec s;
        s.kind = SystemStateKind::partial;
        s.alpha = std::numbers::pi / 3;
        s.delta = std::numbers::pi / 4;
        return s;
    }

    static SystemStateSpec partial_perturbed(double eps = 0.1) {
        SystemStateSpec s = partial();
        s.kind = SystemStateKind::partial_perturbed;
        s.epsilon = eps;
        return s;
    }
};

// Pure state vector |psi> in the two-qubit computational basis {00,01,10,11}.
inline Vector system_state_vector(const SystemStateSpec& spec) {
    Vector psi = Vector::Zero(4);
    const Complex i(0.0, 1.0);
    switch (spec.kind) {
        case SystemStateKind::bell:
        case SystemStateKind::partial:
            psi(0) = std::exp(-i * (spec.delta / 2.0)) * std::cos(spec.alpha / 2.0);
            psi(3) = std::exp(i * (spec.delta / 2.0)) * std::sin(spec.alpha / 2.0);
            break;
        case SystemStateKind::partial_perturbed:
            psi(0) = std::exp(-i * (spec.delta / 2.0)) * std::cos(spec.alpha / 2.0);
            psi(3) = std::exp(i * (spec.delta / 2.0)) * std::sin(spec.alpha / 2.0);
            psi(1) = spec.epsilon;
            break;
        case SystemStateKind::custom:
            if (!spec.custom_amplitudes || spec.custom_amplitudes->size() != 4) {
                throw std::invalid_argument("system_state_vector: custom kind requires 4 amplitudes");
            }
            psi = *spec.custom_amplitudes;
            break;
    }
    const double norm = psi.norm();
    if (norm < 1e-14) {
        throw std::invalid_argument("system_state_vector: zero-norm state");
    }
    return psi / norm;
}

// rho = |psi><psi| for the chosen system state.
inline Matrix make_system_state(const SystemStateSpec& spec) {
    const Vector psi = system_state_vector(spec);
    return psi * psi.adjoint();
}

struct ThermalSpec {
    double temperature; // k_B T
};

// Normalized Boltzmann weights exp(-(E_i - E_min)/kT) / Z, ordered by
// ascending energy. The ground-state shift keeps the largest factor at
// exactly 1; at k_B T = 0.02 with spectral range ~20 the unshifted
// exponentials overflow.
inline RealVector thermal_weights(const Matrix& h, const ThermalSpec& spec) {
    if (!(spec.temperature > 0.0)) {
        throw std::invalid_argument("thermal_weights: temperature must be > 0");
    }
    const HermEigDecomp d = herm_eig(h);
    const double e_min = d.eigenvalues(0);
    RealVector w(d.eigenvalues.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        w(i) = std::exp(-(d.eigenvalues(i) - e_min) / spec.temperature);
    }
    return w / w.sum();
}

// Gibbs state exp(-h/kT) / Tr(exp(-h/kT)).
inline Matrix thermal_state(const Matrix& h, const ThermalSpec& spec) {
    if (!(spec.temperature > 0.0)) {
        throw std::invalid_argument("thermal_state: temperature must be > 0");
    }
    const HermEigDecomp d = herm_eig(h);
    const double e_min = d.eigenvalues(0);
    Matrix w = d.apply([&](double e) {
        return Complex(std::exp(-(e - e_min) / spec.temperature), 0.0);
    });
    const double z = w.trace().real();
    return w / z;
}

inline bool is_density_matrix(const Matrix& rho, double tol = 1e-10) {
    if (rho.rows() != rho.cols()) return false;
    if (!is_hermitian(rho, tol)) return false;
    if (std::abs(trace(rho) - Complex(1.0)) > 100 * tol) return false;
    const HermEigDecomp d = herm_eig(0.5 * (rho + rho.adjoint()));
    return d.eigenvalues(0) >= -tol;
}

inline void require_density_matrix(const Matrix& rho, const char* what, double tol = 1e-10) {
    if (!is_density_matrix(rho, tol)) {
        throw std::invalid_argument(std::string(what) + ": not a valid density matrix");
    }
}

// rho_0 = rho_s ⊗ rho_b1 ⊗ rho_b2 on the 5-site register.
inline Matrix assemble_initial(const Matrix& rho_s, const Matrix& rho_b1, const Matrix& rho_b2) {
    require_density_matrix(rho_s, "assemble_initial(system)", 1e-10);
    require_density_matrix(rho_b1, "assemble_initial(bath1)", 1e-10);
    require_density_matrix(rho_b2, "assemble_initial(bath2)", 1e-10);
    return kron(kron(rho_s, rho_b1), rho_b2);
}

} // namespace spinbath

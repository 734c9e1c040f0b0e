// zeno.hpp — Repeated projective measurements onto the initial system state and
// the resulting survival probabilities.

#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spinbath/dynamics.hpp"
#include "spinbath/linalg.hpp"

namespace spinbath {

enum class ProjectorScope { system_reduced, full_state };

struct ZenoSchedule {
    int n_measurements;    // N
    double interval;       // t_k
    ProjectorScope scope = ProjectorScope::system_reduced;

    void validate() const {
        if (n_measurements < 1) {
            throw std::invalid_argument("ZenoSchedule: need at least one measurement");
        }
        if (!(interval >= 0.0) || !std::isfinite(interval * n_measurements)) {
            throw std::invalid_argument("ZenoSchedule: invalid interval");
        }
    }
};

struct ZenoResult {
    std::vector<double> step_probabilities;     // per-step conditional probability
    std::vector<double> survival_probabilities; // cumulative product, non-increasing
    std::vector<double> trace_diagnostics;      // |Tr(U(t_k) rho)|^2 before each step
    bool extinct = false;                       // survival hit numerical zero
};

// Extinction threshold: below this the renormalization PρP/p is meaningless.
inline constexpr double kExtinctionThreshold = 1e-14;

// P = |psi0><psi0| ⊗ I_bath with psi0 a system (4-dim) pure state.
inline Matrix make_system_projector(const Vector& psi_system, const SpinRegister& reg) {
    if (psi_system.size() != 4) {
        throw std::invalid_argument("make_system_projector: expected a 4-dim system state");
    }
    const Vector psi = psi_system / psi_system.norm();
    const Matrix p_sys = psi * psi.adjoint();
    return kron(p_sys, identity(reg.dim() / 4));
}

// (P rho P / tr, tr) for a Hermitian idempotent P; probability 0 and an
// extinction flag when the trace falls below the threshold.
inline std::pair<Matrix, double> projective_channel(const Matrix& rho, const Matrix& projector) {
    require_hermitian(projector, "projective_channel(projector)");
    if ((projector * projector - projector).norm() > 1e-10 * std::max(projector.norm(), 1.0)) {
        throw std::invalid_argument("projective_channel: projector is not idempotent");
    }
    const Matrix prp = projector * rho * projector;
    const double p = prp.trace().real();
    if (p < kExtinctionThreshold) {
        return {Matrix::Zero(rho.rows(), rho.cols()), 0.0};
    }
    return {prp / p, p};
}

// |prod_k <Psi0| U(t_k) |Psi0>|^2 for the full-space pure state psi_system ⊗
// (dominant eigenvector of rho_b1) ⊗ (dominant eigenvector of rho_b2).
inline double survival_amplitude_product(const Vector& psi_system,
                                         const Matrix& rho_b1, const Matrix& rho_b2,
                                         const Evolver& e, const ZenoSchedule& schedule) {
    schedule.validate();
    auto dominant = [](const Matrix& rho) -> Vector {
        const HermEigDecomp d = herm_eig(0.5 * (rho + rho.adjoint()));
        return d.eigenvectors.col(d.eigenvectors.cols() - 1);
    };
    Vector psi = psi_system / psi_system.norm();
    Vector full(psi.size() * rho_b1.rows() * rho_b2.rows());
    {
        const Vector b1 = dominant(rho_b1);
        const Vector b2 = dominant(rho_b2);
        Eigen::Index idx = 0;
        for (Eigen::Index s = 0; s < psi.size(); ++s)
            for (Eigen::Index i = 0; i < b1.size(); ++i)
                for (Eigen::Index j = 0; j < b2.size(); ++j)
                    full(idx++) = psi(s) * b1(i) * b2(j);
    }
    if (full.size() != e.reg().dim()) {
        throw std::invalid_argument("survival_amplitude_product: state dimension mismatch");
    }

    const Matrix u = e.propagator(schedule.interval);
    Complex product = 1.0;
    for (int k = 0; k < schedule.n_measurements; ++k) {
        product *= full.dot(u * full); // <Psi0|U|Psi0>, Eigen dot conjugates the left side
    }
    return std::norm(product);
}

// Alternate U(t_k) evolution with projection onto the initial state. For the
// system_reduced scope the projector measures only the system factor; for
// full_state it projects onto the dominant eigenvector of rho0 itself.
inline ZenoResult run_zeno(const Matrix& rho0_full, const Vector& psi_system,
                           const Evolver& e, const ZenoSchedule& schedule) {
    schedule.validate();

    Matrix projector;
    if (schedule.scope == ProjectorScope::system_reduced) {
        projector = make_system_projector(psi_system, e.reg());
    } else {
        const HermEigDecomp d = herm_eig(0.5 * (rho0_full + rho0_full.adjoint()));
        const Vector v = d.eigenvectors.col(d.eigenvectors.cols() - 1);
        projector = v * v.adjoint();
    }

    const Matrix u = e.propagator(schedule.interval);

    ZenoResult result;
    Matrix rho = rho0_full;
    double cumulative = 1.0;
    for (int k = 0; k < schedule.n_measurements; ++k) {
        if (result.extinct) {
            result.step_probabilities.push_back(0.0);
            result.survival_probabilities.push_back(0.0);
            result.trace_diagnostics.push_back(0.0);
            continue;
        }
        result.trace_diagnostics.push_back(std::norm((u * rho).trace()));
        rho = u * rho * u.adjoint();
        auto [post, p] = projective_channel(rho, projector);
        if (p == 0.0) {
            result.extinct = true;
            cumulative = 0.0;
        } else {
            rho = post;
            cumulative *= p;
        }
        result.step_probabilities.push_back(p);
        result.survival_probabilities.push_back(cumulative);
    }
    return result;
}

} // namespace spinbath

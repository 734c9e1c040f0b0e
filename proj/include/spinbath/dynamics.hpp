// dynamics.hpp — Unitary evolution under a constant Hamiltonian via a cached
// spectral decomposition, with per-time reduced system states and concurrence.

#pragma once

#include <stdexcept>
#include <vector>

#include "spinbath/entanglement.hpp"
#include "spinbath/linalg.hpp"

namespace spinbath {

struct Trajectory {
    std::vector<double> times;
    std::vector<Matrix> reduced_states; // 4x4 system states
    std::vector<double> concurrences;
    std::vector<double> purities;       // trace(rho_full^2) per point
    std::vector<double> trace_errors;   // |trace(rho_full) - 1| per point
};

class Evolver {
public:
    Evolver(const Matrix& hamiltonian, SpinRegister reg)
        : decomp_(herm_eig(hamiltonian)), register_(std::move(reg)) {
        if (hamiltonian.rows() != register_.dim()) {
            throw std::invalid_argument("Evolver: Hamiltonian dimension does not match register");
        }
    }

    const SpinRegister& reg() const { return register_; }
    const HermEigDecomp& decomposition() const { return decomp_; }

    // U(t) = V exp(-i Λ t) V†
    Matrix propagator(double t) const {
        if (!std::isfinite(t)) {
            throw std::invalid_argument("propagator: time must be finite");
        }
        const Complex i(0.0, 1.0);
        return decomp_.apply([&](double e) { return std::exp(-i * e * t); });
    }

    // rho(t) = U rho(0) U†
    Matrix evolve(const Matrix& rho0, double t) const {
        const Matrix u = propagator(t);
        return u * rho0 * u.adjoint();
    }

private:
    HermEigDecomp decomp_;
    SpinRegister register_;
};

inline Trajectory run_trajectory(const Evolver& e, const Matrix& rho0,
                                 const std::vector<double>& times) {
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw std::invalid_argument("run_trajectory: time grid must be strictly ascending");
        }
    }
    for (double t : times) {
        if (!std::isfinite(t)) {
            throw std::invalid_argument("run_trajectory: non-finite time");
        }
    }

    const auto system_sites = e.reg().sites_with_role(SiteRole::system);

    Trajectory tr;
    tr.times = times;
    tr.reduced_states.reserve(times.size());
    tr.concurrences.reserve(times.size());
    tr.purities.reserve(times.size());
    tr.trace_errors.reserve(times.size());

    for (double t : times) {
        const Matrix rho = e.evolve(rho0, t);
        const Matrix reduced = partial_trace(rho, e.reg(), system_sites);
        tr.reduced_states.push_back(reduced);
        tr.concurrences.push_back(concurrence(reduced).value);
        tr.purities.push_back((rho * rho).trace().real());
        tr.trace_errors.push_back(std::abs(rho.trace() - Complex(1.0)));
    }
    return tr;
}

inline std::vector<double> make_time_grid(double t_max, double dt) {
    if (!(dt > 0.0) || !(t_max > 0.0)) {
        throw std::invalid_argument("make_time_grid: t_max and dt must be > 0");
    }
    std::vector<double> times;
    const auto n = static_cast<std::size_t>(std::llround(t_max / dt));
    times.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) times.push_back(k * dt);
    return times;
}

} // namespace spinbath

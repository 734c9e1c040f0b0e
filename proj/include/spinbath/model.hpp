// model.hpp — Hamiltonians of a two-spin central system coupled to a
// self-interacting two-spin bath and a single-spin bath.

#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spinbath/linalg.hpp"

namespace spinbath {

struct ModelParams {
    double omega_s = 0.7;      // system spin frequency (hbar = 1)
    double omega_b1_1 = 1.0;   // bath-1 site frequencies
    double omega_b1_2 = 1.0;
    double omega_b2 = 1.0;     // bath-2 site frequency
    double beta_field = 0.01;  // transverse field beta
    double lambda_intra = 0.0; // intra-bath coupling lambda (>=0 antiferro, <=0 ferro)
    double lambda_sb = 0.1;    // system-bath coupling lambda_0
    double temperature = 0.02; // k_B T, natural units

    void validate() const {
        if (!(temperature > 0.0)) {
            throw std::invalid_argument("ModelParams: temperature must be > 0");
        }
        for (double v : {omega_s, omega_b1_1, omega_b1_2, omega_b2,
                         beta_field, lambda_intra, lambda_sb, temperature}) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("ModelParams: non-finite parameter");
            }
        }
    }
};

// Which system spin couples to which bath spin, each edge with weight lambda_0.
struct CouplingTopology {
    std::vector<std::pair<int, int>> edges; // (system site, bath site)

    // System spin 1 to both bath-1 spins, system spin 2 to the bath-2 spin.
    static CouplingTopology default_for(const SpinRegister& reg) {
        const auto b1 = reg.sites_with_role(SiteRole::bath1);
        const auto b2 = reg.sites_with_role(SiteRole::bath2);
        const auto sys = reg.sites_with_role(SiteRole::system);
        CouplingTopology t;
        for (int b : b1) t.edges.emplace_back(sys[0], b);
        for (int b : b2) t.edges.emplace_back(sys[1], b);
        return t;
    }

    void validate(const SpinRegister& reg) const {
        if (edges.empty()) {
            throw std::invalid_argument("CouplingTopology: at least one edge required");
        }
        for (const auto& [s, b] : edges) {
            if (reg.role(s) != SiteRole::system) {
                throw std::invalid_argument("CouplingTopology: edge source is not a system site");
            }
            if (reg.role(b) == SiteRole::system) {
                throw std::invalid_argument("CouplingTopology: edge target is not a bath site");
            }
        }
    }
};

enum class SystemHamiltonianForm { sum, literal_product };

// Lift a single-site 2×2 operator to the full register.
inline Matrix embed(const Matrix& site_op, int site_id, const SpinRegister& reg) {
    if (site_op.rows() != 2 || site_op.cols() != 2) {
        throw std::invalid_argument("embed: site operator must be 2x2");
    }
    const int pos = reg.index_of(site_id);
    Matrix out = Matrix::Identity(1, 1);
    for (int i = 0; i < reg.num_sites(); ++i) {
        out = kron(out, i == pos ? site_op : identity(2));
    }
    return out;
}

// Single-spin term (omega/2) sigma_z + beta sigma_x.
inline Matrix single_spin_term(double omega, double beta) {
    return 0.5 * omega * sigma_z() + beta * sigma_x();
}

// H_S: sum of the two embedded single-spin terms, or their literal tensor
// product on the system factor (the product form is retained for comparison).
inline Matrix build_system_hamiltonian(const ModelParams& p, const SpinRegister& reg,
                                       SystemHamiltonianForm form = SystemHamiltonianForm::sum) {
    p.validate();
    const auto sys = reg.sites_with_role(SiteRole::system);
    const Matrix h = single_spin_term(p.omega_s, p.beta_field);
    if (form == SystemHamiltonianForm::sum) {
        return embed(h, sys[0], reg) + embed(h, sys[1], reg);
    }
    return embed(h, sys[0], reg) * embed(h, sys[1], reg);
}

// H_B1: per-site sigma_z and sigma_x terms plus lambda sigma_x sigma_x between
// the two bath-1 spins.
inline Matrix build_bath1_hamiltonian(const ModelParams& p, const SpinRegister& reg) {
    p.validate();
    const auto b1 = reg.sites_with_role(SiteRole::bath1);
    const double omegas[] = {p.omega_b1_1, p.omega_b1_2};
    Matrix h = Matrix::Zero(reg.dim(), reg.dim());
    for (std::size_t i = 0; i < b1.size(); ++i) {
        const double w = i < 2 ? omegas[i] : omegas[1];
        h += embed(single_spin_term(w, p.beta_field), b1[i], reg);
    }
    // One coupling term per unordered pair.
    for (std::size_t i = 0; i < b1.size(); ++i) {
        for (std::size_t j = i + 1; j < b1.size(); ++j) {
            h += p.lambda_intra * embed(sigma_x(), b1[i], reg) * embed(sigma_x(), b1[j], reg);
        }
    }
    return h;
}

// H_B2: single free spin.
inline Matrix build_bath2_hamiltonian(const ModelParams& p, const SpinRegister& reg) {
    p.validate();
    Matrix h = Matrix::Zero(reg.dim(), reg.dim());
    for (int b : reg.sites_with_role(SiteRole::bath2)) {
        h += embed(single_spin_term(p.omega_b2, p.beta_field), b, reg);
    }
    return h;
}

// H_SB: lambda_0 sum over topology edges of sigma_x sigma_x.
inline Matrix build_interaction(const ModelParams& p, const CouplingTopology& topology,
                                const SpinRegister& reg) {
    p.validate();
    topology.validate(reg);
    Matrix h = Matrix::Zero(reg.dim(), reg.dim());
    for (const auto& [s, b] : topology.edges) {
        h += p.lambda_sb * embed(sigma_x(), s, reg) * embed(sigma_x(), b, reg);
    }
    return h;
}

// Bath Hamiltonians on their own factors, used for thermal state preparation.
inline Matrix bath1_local_hamiltonian(const ModelParams& p) {
    p.validate();
    const Matrix h1 = single_spin_term(p.omega_b1_1, p.beta_field);
    const Matrix h2 = single_spin_term(p.omega_b1_2, p.beta_field);
    return kron(h1, identity(2)) + kron(identity(2), h2)
         + p.lambda_intra * kron(sigma_x(), sigma_x());
}

inline Matrix bath2_local_hamiltonian(const ModelParams& p) {
    p.validate();
    return single_spin_term(p.omega_b2, p.beta_field);
}

inline Matrix build_total(const ModelParams& p, const CouplingTopology& topology,
                          const SpinRegister& reg,
                          SystemHamiltonianForm form = SystemHamiltonianForm::sum) {
    return build_system_hamiltonian(p, reg, form)
         + build_bath1_hamiltonian(p, reg)
         + build_bath2_hamiltonian(p, reg)
         + build_interaction(p, topology, reg);
}

} // namespace spinbath

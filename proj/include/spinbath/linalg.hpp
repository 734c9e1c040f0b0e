// linalg.hpp — Dense complex linear algebra kernel: Pauli operators, Kronecker
// composition, Hermitian spectral decomposition, matrix functions, partial trace.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinbath {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

// Dimension cap for register compositions. Keeps a runaway kron chain from
// allocating gigabytes.
inline constexpr Eigen::Index kMaxDimension = 4096;

// --------------------------- 2×2 Pauli and identity -------------------------

inline Matrix identity(Eigen::Index d) { return Matrix::Identity(d, d); }

inline Matrix sigma_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0,
         1.0, 0.0;
    return m;
}

inline Matrix sigma_y() {
    Matrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0),
         Complex(0.0, 1.0), 0.0;
    return m;
}

inline Matrix sigma_z() {
    Matrix m(2, 2);
    m << 1.0,  0.0,
         0.0, -1.0;
    return m;
}

// --------------------------- Checks ------------------------------------------

inline void require_finite(const Matrix& a, const char* what) {
    if (!a.allFinite()) {
        throw std::invalid_argument(std::string(what) + ": non-finite entries");
    }
}

inline void require_square(const Matrix& a, const char* what) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square, dim >= 1");
    }
}

inline Matrix dagger(const Matrix& a) { return a.adjoint(); }

// Relative Frobenius-norm Hermiticity check: ||A - A†||_F <= tol * ||A||_F.
inline bool is_hermitian(const Matrix& a, double rel_tol = 1e-10) {
    const double scale = a.norm();
    const double resid = (a - a.adjoint()).norm();
    return resid <= rel_tol * (scale > 0.0 ? scale : 1.0);
}

inline void require_hermitian(const Matrix& a, const char* what, double rel_tol = 1e-10) {
    require_square(a, what);
    if (!is_hermitian(a, rel_tol)) {
        throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian within tolerance");
    }
}

// --------------------------- Composition --------------------------------------

inline Matrix kron(const Matrix& a, const Matrix& b) {
    require_square(a, "kron");
    require_square(b, "kron");
    if (a.rows() * b.rows() > kMaxDimension) {
        throw std::invalid_argument("kron: result dimension exceeds configured maximum");
    }
    Matrix out = Eigen::kroneckerProduct(a, b);
    return out;
}

inline Complex trace(const Matrix& a) {
    require_square(a, "trace");
    return a.trace();
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// --------------------------- Spin register ------------------------------------

enum class SiteRole { system, bath1, bath2 };

struct Site {
    int id;
    SiteRole role;
};

// Ordered list of spin-1/2 sites. Canonical order: system spins first, then
// bath-1 spins, then bath-2 spins; kron compositions always follow this order.
class SpinRegister {
public:
    // Arbitrary site list; model-shape constraints live in the 3-arg constructor.
    explicit SpinRegister(std::vector<Site> sites) : sites_(std::move(sites)) {
        if (sites_.empty()) {
            throw std::invalid_argument("SpinRegister: need at least one site");
        }
        if ((Eigen::Index(1) << sites_.size()) > kMaxDimension) {
            throw std::invalid_argument("SpinRegister: total dimension exceeds configured maximum");
        }
    }

    SpinRegister(int n_system, int n_bath1, int n_bath2) {
        if (n_system != 2 || n_bath1 < 1 || n_bath2 < 1) {
            throw std::invalid_argument("SpinRegister: need exactly 2 system sites and >=1 site per bath");
        }
        int id = 1;
        for (int i = 0; i < n_system; ++i) sites_.push_back({id++, SiteRole::system});
        for (int i = 0; i < n_bath1; ++i) sites_.push_back({id++, SiteRole::bath1});
        for (int i = 0; i < n_bath2; ++i) sites_.push_back({id++, SiteRole::bath2});
        if ((Eigen::Index(1) << sites_.size()) > kMaxDimension) {
            throw std::invalid_argument("SpinRegister: total dimension exceeds configured maximum");
        }
    }

    static SpinRegister default_instance() { return SpinRegister(2, 2, 1); }

    int num_sites() const { return static_cast<int>(sites_.size()); }
    Eigen::Index dim() const { return Eigen::Index(1) << sites_.size(); }
    const std::vector<Site>& sites() const { return sites_; }

    SiteRole role(int site_id) const { return sites_.at(index_of(site_id)).role; }

    int index_of(int site_id) const {
        for (std::size_t i = 0; i < sites_.size(); ++i) {
            if (sites_[i].id == site_id) return static_cast<int>(i);
        }
        throw std::out_of_range("SpinRegister: unknown site id " + std::to_string(site_id));
    }

    std::vector<int> sites_with_role(SiteRole r) const {
        std::vector<int> ids;
        for (const auto& s : sites_) {
            if (s.role == r) ids.push_back(s.id);
        }
        return ids;
    }

private:
    std::vector<Site> sites_;
};

// --------------------------- Partial trace ------------------------------------

// Trace out every site not listed in `keep`. Kept sites appear in the result in
// register order. All local dimensions are 2.
inline Matrix partial_trace(const Matrix& rho, const SpinRegister& reg,
                            const std::vector<int>& keep) {
    require_square(rho, "partial_trace");
    if (rho.rows() != reg.dim()) {
        throw std::invalid_argument("partial_trace: state dimension does not match register");
    }
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set must be non-empty");
    }

    const int n = reg.num_sites();
    std::vector<bool> kept(n, false);
    for (int id : keep) {
        kept[reg.index_of(id)] = true;  // throws on unknown site
    }

    std::vector<int> keep_pos, trace_pos;
    for (int i = 0; i < n; ++i) {
        (kept[i] ? keep_pos : trace_pos).push_back(i);
    }

    const auto nk = static_cast<int>(keep_pos.size());
    const auto nt = static_cast<int>(trace_pos.size());
    const Eigen::Index dk = Eigen::Index(1) << nk;
    const Eigen::Index dt = Eigen::Index(1) << nt;

    // Basis index of the full register from kept-part index i and traced-part
    // index e. Site 0 is the leftmost kron factor, i.e. the highest bit.
    auto full_index = [&](Eigen::Index i, Eigen::Index e) {
        Eigen::Index idx = 0;
        for (int b = 0; b < nk; ++b) {
            const Eigen::Index bit = (i >> (nk - 1 - b)) & 1;
            idx |= bit << (n - 1 - keep_pos[b]);
        }
        for (int b = 0; b < nt; ++b) {
            const Eigen::Index bit = (e >> (nt - 1 - b)) & 1;
            idx |= bit << (n - 1 - trace_pos[b]);
        }
        return idx;
    };

    Matrix out = Matrix::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dk; ++i) {
        for (Eigen::Index j = 0; j < dk; ++j) {
            Complex acc = 0.0;
            for (Eigen::Index e = 0; e < dt; ++e) {
                acc += rho(full_index(i, e), full_index(j, e));
            }
            out(i, j) = acc;
        }
    }
    return out;
}

// --------------------------- Spectral decomposition ---------------------------

// Eigenvalues ascending, eigenvector columns orthonormal.
struct HermEigDecomp {
    RealVector eigenvalues;
    Matrix eigenvectors;

    Matrix apply(const std::function<Complex(double)>& f) const {
        const Eigen::Index d = eigenvalues.size();
        Vector fx(d);
        for (Eigen::Index i = 0; i < d; ++i) fx(i) = f(eigenvalues(i));
        return eigenvectors * fx.asDiagonal() * eigenvectors.adjoint();
    }
};

inline HermEigDecomp herm_eig(const Matrix& a) {
    require_hermitian(a, "herm_eig");
    require_finite(a, "herm_eig");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("herm_eig: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

// f(A) = V f(Λ) V† for Hermitian A.
inline Matrix func_hermitian(const Matrix& a, const std::function<Complex(double)>& f) {
    return herm_eig(a).apply(f);
}

} // namespace spinbath

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <random>

#include "spinbath/entanglement.hpp"
#include "spinbath/states.hpp"
#include "test_helpers.hpp"

using namespace spinbath;
using spinbath::testing::random_density;
using spinbath::testing::random_pure;
using spinbath::testing::random_unitary;

TEST_CASE("spin flip basics") {
    const Matrix mixed = identity(4) / 4.0;
    CHECK((spin_flip(mixed) - mixed).norm() < 1e-14);

    const Matrix bell = make_system_state(SystemStateSpec::bell());
    CHECK((spin_flip(bell) - bell).cwiseAbs().maxCoeff() < 1e-12);

    Matrix rho00 = Matrix::Zero(4, 4);
    rho00(0, 0) = 1.0;
    Matrix rho11 = Matrix::Zero(4, 4);
    rho11(3, 3) = 1.0;
    CHECK((spin_flip(rho00) - rho11).norm() < 1e-14);

    CHECK_THROWS_AS(spin_flip(identity(2)), std::invalid_argument);
}

TEST_CASE("concurrence of reference states") {
    CHECK(concurrence(make_system_state(SystemStateSpec::bell())).value
          == Catch::Approx(1.0).margin(1e-10));

    Matrix rho00 = Matrix::Zero(4, 4);
    rho00(0, 0) = 1.0;
    CHECK(concurrence(rho00).value == Catch::Approx(0.0).margin(1e-12));

    // cos(alpha/2) = sqrt(3)/2 superposition: C = 2|ab| = sqrt(3)/2
    CHECK(concurrence(make_system_state(SystemStateSpec::partial())).value
          == Catch::Approx(std::sqrt(3.0) / 2.0).margin(1e-10));
}

TEST_CASE("concurrence result stores descending square roots") {
    const auto r = concurrence(make_system_state(SystemStateSpec::bell()));
    for (int i = 1; i < 4; ++i) CHECK(r.sqrt_eigenvalues[i] <= r.sqrt_eigenvalues[i - 1]);
    CHECK(r.value == Catch::Approx(r.sqrt_eigenvalues[0] - r.sqrt_eigenvalues[1]
                                   - r.sqrt_eigenvalues[2] - r.sqrt_eigenvalues[3]).margin(1e-12));
}

TEST_CASE("pure-state closed form 2|a||b|") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> angle(0.0, 3.14159);
    for (int trial = 0; trial < 50; ++trial) {
        SystemStateSpec spec;
        spec.alpha = angle(rng);
        spec.delta = angle(rng);
        const double a = std::cos(spec.alpha / 2.0);
        const double b = std::sin(spec.alpha / 2.0);
        CHECK(concurrence(make_system_state(spec)).value
              == Catch::Approx(2.0 * std::abs(a) * std::abs(b)).margin(1e-10));
    }
}

TEST_CASE("local-unitary invariance") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 25; ++trial) {
        const Matrix rho = random_density(4, rng);
        const double c = concurrence(rho).value;
        const Matrix u = kron(random_unitary(2, rng), random_unitary(2, rng));
        const double c_rot = concurrence(u * rho * u.adjoint()).value;
        CHECK(c_rot == Catch::Approx(c).margin(1e-10));
    }
}

TEST_CASE("concurrence stays in range on random mixed states") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto r = concurrence(random_density(4, rng));
        CHECK(r.value >= 0.0);
        CHECK(r.value <= 1.0 + 1e-12);
    }
}

TEST_CASE("spectrum of rho * spin_flip(rho) is nonnegative") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix rho = random_density(4, rng);
        const auto r = concurrence(rho); // throws if spectrum dips below -1e-10
        for (double s : r.sqrt_eigenvalues) CHECK(s >= 0.0);
    }
}

TEST_CASE("agreement with the Hermitian-form oracle on mixed states") {
    // independent route: square roots of the eigenvalues of
    // sqrt(rho) * spin_flip(rho) * sqrt(rho)
    std::mt19937 rng(36);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix rho = random_density(4, rng);
        const auto d = herm_eig(rho);
        const Matrix sqrt_rho = d.apply([](double e) {
            return Complex(std::sqrt(std::max(e, 0.0)), 0.0);
        });
        const Matrix m = sqrt_rho * spin_flip(rho) * sqrt_rho;
        const auto md = herm_eig(0.5 * (m + m.adjoint()));
        std::array<double, 4> oracle{};
        for (int i = 0; i < 4; ++i) oracle[i] = std::sqrt(std::max(md.eigenvalues(3 - i), 0.0));

        const auto r = concurrence(rho);
        for (int i = 0; i < 4; ++i) {
            CHECK(r.sqrt_eigenvalues[i] == Catch::Approx(oracle[i]).margin(1e-7));
        }
    }
}

TEST_CASE("separable pure products have zero concurrence") {
    std::mt19937 rng(35);
    for (int trial = 0; trial < 50; ++trial) {
        const Vector a = random_pure(2, rng);
        const Vector b = random_pure(2, rng);
        Vector psi(4);
        psi << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
        const Matrix rho = psi * psi.adjoint();
        CHECK(concurrence(rho).value == Catch::Approx(0.0).margin(1e-10));
    }
}

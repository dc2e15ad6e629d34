#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lee/fixtures.hpp"
#include "lee/model_builder.hpp"
#include "lee/phase_algebra.hpp"

#include <cmath>
#include <random>

using namespace lee;

namespace {

Matrix4 random_symmetric(std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    Matrix4 m;
    for (int j = 0; j < 4; ++j) {
        for (int k = j; k < 4; ++k) {
            m(j, k) = d(rng);
            m(k, j) = m(j, k);
        }
    }
    return m;
}

// symplectic-orthogonal 4x4: [[X, Y], [-Y, X]] with X + iY unitary
Matrix4 random_symplectic_orthogonal(std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Eigen::Matrix2cd a;
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) a(j, k) = Complex(d(rng), d(rng));
    }
    const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(a);
    Eigen::Matrix2cd q = qr.householderQ();
    Matrix4 s;
    s.topLeftCorner<2, 2>() = q.real();
    s.topRightCorner<2, 2>() = q.imag();
    s.bottomLeftCorner<2, 2>() = -q.imag();
    s.bottomRightCorner<2, 2>() = q.real();
    return s;
}

}  // namespace

TEST_CASE("symplectic form invariants") {
    const Matrix4& J = symplectic_form();
    CHECK((J.transpose() + J).cwiseAbs().maxCoeff() == 0.0);
    CHECK((J * J + Matrix4::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("commutator of basis forms reproduces the canonical relations") {
    CHECK(commutator(basis_form(kX), basis_form(kPx)) == Complex(0.0, 1.0));
    CHECK(commutator(basis_form(kY), basis_form(kPy)) == Complex(0.0, 1.0));
    CHECK(commutator(basis_form(kX), basis_form(kY)) == Complex(0.0, 0.0));
    CHECK(commutator(basis_form(kX), basis_form(kPy)) == Complex(0.0, 0.0));
    const LinearForm f = basis_form(kPx);
    CHECK(commutator(f, f) == Complex(0.0, 0.0));
}

TEST_CASE("commutator is antisymmetric and bilinear") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        LinearForm f, g, f2;
        for (int k = 0; k < 4; ++k) {
            f.coeffs(k) = Complex(d(rng), d(rng));
            g.coeffs(k) = Complex(d(rng), d(rng));
            f2.coeffs(k) = Complex(d(rng), d(rng));
        }
        const Complex alpha(d(rng), d(rng));
        CHECK(std::abs(commutator(f, g) + commutator(g, f)) < 1e-14);
        LinearForm lin;
        lin.coeffs = alpha * f.coeffs + f2.coeffs;
        const Complex lhs = commutator(lin, g);
        const Complex rhs = alpha * commutator(f, g) + commutator(f2, g);
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("transform_commutators: identity recovers the canonical table") {
    const CommutatorTable t = transform_commutators(Matrix4::Identity());
    CHECK(t.t(0, 2) == Complex(0.0, 1.0));
    CHECK(t.t(1, 3) == Complex(0.0, 1.0));
    CHECK(t.t(0, 1) == Complex(0.0, 0.0));
    CHECK(t.t(0, 3) == Complex(0.0, 0.0));
    CHECK(t.t(1, 2) == Complex(0.0, 0.0));
    CHECK(t.t(2, 3) == Complex(0.0, 0.0));
}

TEST_CASE("transform_commutators: case-1 reference matrix") {
    const CommutatorTable t = transform_commutators(case1_fixture_S());
    const double r27 = std::sqrt(2.0 / 7.0), r57 = std::sqrt(5.0 / 7.0);
    CHECK(t.im(0, 1) == doctest::Approx(-r27).epsilon(1e-13));
    CHECK(t.im(0, 2) == doctest::Approx(-r57).epsilon(1e-13));
    CHECK(std::abs(t.im(0, 3)) < 1e-12);
    CHECK(std::abs(t.im(1, 2)) < 1e-12);
    CHECK(t.im(1, 3) == doctest::Approx(r57).epsilon(1e-13));
    CHECK(t.im(2, 3) == doctest::Approx(-r27).epsilon(1e-13));
}

TEST_CASE("transform_commutators: case-2 reference matrix") {
    const CommutatorTable t = transform_commutators(case2_fixture_S());
    CHECK(t.im(0, 2) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(t.im(1, 3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(t.im(0, 1)) < 1e-12);
    CHECK(std::abs(t.im(0, 3)) < 1e-12);
    CHECK(std::abs(t.im(1, 2)) < 1e-12);
    CHECK(std::abs(t.im(2, 3)) < 1e-12);
}

TEST_CASE("tables are antisymmetric exactly; symplectic-orthogonal S stays canonical") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix4 s = random_symplectic_orthogonal(rng);
        const Matrix4& J = symplectic_form();
        REQUIRE((s * J * s.transpose() - J).cwiseAbs().maxCoeff() < 1e-12);
        const CommutatorTable t = transform_commutators(s);
        CHECK((t.t.transpose() + t.t).cwiseAbs().maxCoeff() == 0.0);
        CHECK(std::abs(t.t(0, 2) - Complex(0.0, 1.0)) < 1e-12);
        CHECK(std::abs(t.t(1, 3) - Complex(0.0, 1.0)) < 1e-12);
        CHECK(std::abs(t.t(0, 1)) < 1e-12);
        CHECK(std::abs(t.t(2, 3)) < 1e-12);
    }
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    Matrix4 any;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) any(j, k) = d(rng);
    }
    const CommutatorTable t = transform_commutators(any);
    CHECK((t.t.transpose() + t.t).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("eigendecompose: identity matrix") {
    const EigenDecomposition dec = eigendecompose(QuadraticHamiltonian::from_matrix(Matrix4::Identity()));
    CHECK((dec.eigenvalues - Vector4::Ones()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((dec.S - Matrix4::Identity()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("eigendecompose: the two reference spectra") {
    const EigenDecomposition d1 = eigendecompose(build_h({-1.0, 1.0 / 3.0}));
    CHECK((d1.eigenvalues - case1_eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
    const EigenDecomposition d2 = eigendecompose(build_h({1.0, 1.0}));
    CHECK((d2.eigenvalues - case2_eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("eigendecompose invariants on random symmetric matrices") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 40; ++rep) {
        const Matrix4 m = random_symmetric(rng);
        const QuadraticHamiltonian h = QuadraticHamiltonian::from_matrix(m);
        const EigenDecomposition dec = eigendecompose(h);

        CHECK((dec.S * dec.S.transpose() - Matrix4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((dec.S * m * dec.S.transpose() - dec.h_d).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((dec.S.transpose() * dec.h_d * dec.S - m).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(dec.h_d.trace() == doctest::Approx(m.trace()).epsilon(1e-10));
        CHECK(dec.h_d.determinant() == doctest::Approx(m.determinant()).epsilon(1e-8));
        for (int j = 0; j + 1 < 4; ++j) CHECK(dec.eigenvalues(j) >= dec.eigenvalues(j + 1));
        // sign rule: first entry of largest magnitude is positive
        for (int j = 0; j < 4; ++j) {
            int arg = 0;
            for (int k = 1; k < 4; ++k) {
                if (std::abs(dec.S(j, k)) > std::abs(dec.S(j, arg))) arg = k;
            }
            CHECK(dec.S(j, arg) > 0.0);
        }
    }
}

TEST_CASE("quad_eval") {
    const QuadraticHamiltonian id = QuadraticHamiltonian::from_matrix(Matrix4::Identity());
    CHECK(quad_eval(id, Vector4::Zero()) == 0.0);
    CHECK(quad_eval(id, Vector4::Ones()) == doctest::Approx(2.0));
    Vector4 e1;
    e1 << 1.0, 0.0, 0.0, 0.0;
    CHECK(quad_eval(build_h({1.0, 1.0}), e1) == doctest::Approx(1.0));
}

TEST_CASE("from_matrix rejects asymmetry and mirrors exactly") {
    Matrix4 bad = Matrix4::Identity();
    bad(0, 1) = 0.5;
    CHECK_THROWS_AS((void)QuadraticHamiltonian::from_matrix(bad), std::invalid_argument);
    Matrix4 nearly = Matrix4::Identity();
    nearly(0, 1) = 0.3;
    nearly(1, 0) = 0.3 + 1e-14;
    const QuadraticHamiltonian h = QuadraticHamiltonian::from_matrix(nearly);
    CHECK(h.h(0, 1) == h.h(1, 0));
}

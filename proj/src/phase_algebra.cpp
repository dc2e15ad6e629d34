#include "lee/phase_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace lee {

const Matrix4& symplectic_form() {
    static const Matrix4 J = [] {
        Matrix4 j = Matrix4::Zero();
        j(0, 2) = 1.0;
        j(1, 3) = 1.0;
        j(2, 0) = -1.0;
        j(3, 1) = -1.0;
        return j;
    }();
    return J;
}

LinearForm basis_form(Axis a) {
    LinearForm f;
    f.coeffs = CVector4::Zero();
    f.coeffs(static_cast<int>(a)) = Complex(1.0, 0.0);
    return f;
}

QuadraticHamiltonian QuadraticHamiltonian::from_matrix(const Matrix4& m) {
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("QuadraticHamiltonian: matrix is not symmetric");
    }
    Matrix4 h = m;
    for (int j = 0; j < 4; ++j) {
        for (int k = j + 1; k < 4; ++k) h(k, j) = h(j, k);
    }
    return QuadraticHamiltonian{h};
}

CommutatorTable CommutatorTable::canonical() {
    return transform_commutators(Matrix4::Identity());
}

Complex commutator(const LinearForm& f, const LinearForm& g) {
    const Matrix4& J = symplectic_form();
    Complex s(0.0, 0.0);
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (J(j, k) != 0.0) s += f.coeffs(j) * J(j, k) * g.coeffs(k);
        }
    }
    return Complex(0.0, 1.0) * s;
}

namespace {

CommutatorTable table_from_real(const Matrix4& A) {
    CMatrix4 t = CMatrix4::Zero();
    // mirror the upper triangle so the table is antisymmetric exactly
    for (int j = 0; j < 4; ++j) {
        for (int k = j + 1; k < 4; ++k) {
            t(j, k) = Complex(0.0, A(j, k));
            t(k, j) = -t(j, k);
        }
    }
    return CommutatorTable{t};
}

}  // namespace

CommutatorTable transform_commutators(const Matrix4& S) {
    return table_from_real(S * symplectic_form() * S.transpose());
}

CommutatorTable transform_table(const Matrix4& W, const CommutatorTable& base) {
    return table_from_real(W * base.t.imag() * W.transpose());
}

EigenDecomposition eigendecompose(const QuadraticHamiltonian& h) {
    EigenDecomposition out;
    bool diagonal = true;
    for (int j = 0; j < 4 && diagonal; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (j != k && h.h(j, k) != 0.0) {
                diagonal = false;
                break;
            }
        }
    }
    if (diagonal) {
        // already diagonal: stable descending reorder of the basis vectors
        int order[4] = {0, 1, 2, 3};
        std::stable_sort(order, order + 4,
                         [&](int a, int b) { return h.h(a, a) > h.h(b, b); });
        out.S = Matrix4::Zero();
        for (int j = 0; j < 4; ++j) {
            out.eigenvalues(j) = h.h(order[j], order[j]);
            out.S(j, order[j]) = 1.0;
        }
        out.h_d = out.eigenvalues.asDiagonal();
        return out;
    }

    Eigen::SelfAdjointEigenSolver<Matrix4> solver;
    solver.compute(h.h);
    // Eigen returns ascending order; flip to descending
    for (int j = 0; j < 4; ++j) {
        out.eigenvalues(j) = solver.eigenvalues()(3 - j);
        out.S.row(j) = solver.eigenvectors().col(3 - j).transpose();
    }
    // sign convention: first entry of largest magnitude positive
    for (int j = 0; j < 4; ++j) {
        int arg = 0;
        double best = std::abs(out.S(j, 0));
        for (int k = 1; k < 4; ++k) {
            if (std::abs(out.S(j, k)) > best) {
                best = std::abs(out.S(j, k));
                arg = k;
            }
        }
        if (out.S(j, arg) < 0.0) out.S.row(j) = -out.S.row(j);
    }
    out.h_d = out.eigenvalues.asDiagonal();
    return out;
}

double quad_eval(const QuadraticHamiltonian& h, const Vector4& v) {
    return 0.5 * v.dot(h.h * v);
}

}  // namespace lee

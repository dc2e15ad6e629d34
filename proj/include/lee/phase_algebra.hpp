// phase_algebra.hpp — symplectic linear algebra over the 4-dimensional phase space:
// commutators of linear observables, quadratic forms, and orthogonal
// eigen-decomposition of symmetric 4x4 Hamiltonian matrices.
//
// The phase-space basis ordering (x, y, p_x, p_y) is fixed globally and is
// never permuted implicitly. Units: hbar = 1, m = k = 1.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace lee {

using Complex  = std::complex<double>;
using Matrix4  = Eigen::Matrix4d;
using Vector4  = Eigen::Vector4d;
using CMatrix4 = Eigen::Matrix4cd;
using CVector4 = Eigen::Vector4cd;

// Indices into the fixed basis ordering.
enum Axis : int { kX = 0, kY = 1, kPx = 2, kPy = 3 };

// The symplectic form J for the basis (x, y, p_x, p_y):
//   J = [[0, I2], [-I2, 0]],  J^T = -J,  J^2 = -I.
// Pairwise canonical commutators are [v_j, v_k] = i J_jk.
const Matrix4& symplectic_form();

// An observable linear in phase space: f = coeffs . (x, y, p_x, p_y).
struct LinearForm {
    CVector4 coeffs;
};

// Basis observable along one axis, e.g. basis_form(kPx) is p_x.
LinearForm basis_form(Axis a);

// Symmetric real matrix h of a quadratic Hamiltonian H = 1/2 v^T h v.
// Exact symmetry is enforced at construction.
struct QuadraticHamiltonian {
    Matrix4 h;

    // Validates near-symmetry (1e-12) and mirrors the upper triangle so that
    // h == h^T holds exactly.
    static QuadraticHamiltonian from_matrix(const Matrix4& m);
};

// Table of pairwise commutators [V_j, V_k] of four transformed variables.
// Entries are purely imaginary; the table is antisymmetric exactly.
struct CommutatorTable {
    CMatrix4 t;

    static CommutatorTable canonical();
    // imaginary part of entry (j, k)
    double im(int j, int k) const { return t(j, k).imag(); }
};

// Result of diagonalizing h: eigenvalues sorted descending, rows of S are the
// orthonormal eigenvectors, h_d = diag(eigenvalues), S h S^T = h_d.
struct EigenDecomposition {
    Vector4 eigenvalues;
    Matrix4 S;
    Matrix4 h_d;
};

// [f, g] = i f^T J g. Bilinear, antisymmetric.
Complex commutator(const LinearForm& f, const LinearForm& g);

// Commutator table of the transformed variables V = S v:
//   T_jk = i (S J S^T)_jk.
// S need not be orthogonal.
CommutatorTable transform_commutators(const Matrix4& S);

// Table of W U for variables U that already carry the table `base`:
//   T'_jk = i (W Im(base) W^T)_jk.
// transform_commutators(S) equals transform_table(S, canonical table).
CommutatorTable transform_table(const Matrix4& W, const CommutatorTable& base);

// Orthogonal eigen-decomposition with deterministic output: eigenvalues
// descending; each eigenvector row has its first entry of largest magnitude
// made positive. Within a degenerate eigenspace any orthonormal basis may be
// returned.
EigenDecomposition eigendecompose(const QuadraticHamiltonian& h);

// 1/2 v^T h v.
double quad_eval(const QuadraticHamiltonian& h, const Vector4& v);

}  // namespace lee

// spectral_engine.hpp — ladder operators, eigenfunctions, and spectra of the
// decoupled modes. Standard modes get bosonic operators and Hermite
// eigenfunctions; the inverted mode gets a pseudo-bosonic pair (A, B) with
// [A, B] = 1 but B != A^dag, whose generalized eigenfunctions are polynomials
// times a purely-imaginary-phase Gaussian. Everything is represented
// symbolically (polynomial x Gaussian), so eigen-identities are checked at the
// level of polynomial coefficients with no grids or integrals involved.

#pragma once

#include "lee/canonical_quantizer.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace lee {

// Polynomial with complex coefficients, ascending degree. Exact trailing
// zeros are trimmed; the zero polynomial has no coefficients and degree -1.
class ComplexPoly {
public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<Complex> coeffs);
    static ComplexPoly constant(Complex c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Complex coeff(int k) const;
    const std::vector<Complex>& coeffs() const { return c_; }

    Complex eval(Complex q) const;
    ComplexPoly derivative() const;
    ComplexPoly times_q() const;
    ComplexPoly scaled(Complex s) const;

    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);

private:
    void trim();
    std::vector<Complex> c_;
};

// First-order ladder operator L f = mu Q f + nu f'. (mu, nu) != (0, 0).
struct LadderOp {
    Complex mu;
    Complex nu;

    static LadderOp make(Complex mu, Complex nu);
    // Adjoint on L^2: (mu Q + nu d/dQ)^dag = conj(mu) Q - conj(nu) d/dQ.
    LadderOp adjoint() const;
};

enum class ModeClass { Normalizable, Tempered };

// f(Q) = poly(Q) exp(sigma Q^2 / 2). Re(sigma) < 0 gives a square-integrable
// function, Re(sigma) = 0 a tempered distribution; Re(sigma) > 0 is rejected.
struct ModeFunction {
    ComplexPoly poly;
    Complex sigma;
    ModeClass class_tag;

    static ModeFunction make(ComplexPoly poly, Complex sigma);
    Complex eval(Complex q) const;
    bool is_zero() const { return poly.is_zero(); }
};

enum class EnergyRegime { Real, Complex };

// Energy E_{n,m} of the two-mode system; regime Real implies the imaginary
// part is exactly zero.
struct EnergyLevel {
    int n;
    int m;
    Complex value;
    EnergyRegime regime;
};

struct StandardLadder {
    LadderOp a;
    LadderOp adag;
    double omega;      // sqrt(p_coeff * q_coeff); H = omega (adag a + 1/2)
    double omega_eff;  // alpha^2 = sqrt(q_coeff / p_coeff), Gaussian width
};

// Bosonic pair for a standard mode H = 1/2 (A P^2 + B Q^2):
//   a = (alpha Q + d/dQ / alpha)/sqrt(2),  alpha = (B/A)^{1/4}.
// Throws std::invalid_argument("not a standard mode") otherwise.
StandardLadder standard_ladder(const DecoupledMode& mode);

// Physicists' Hermite polynomial by the recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite(int n, double x);
// Coefficients of H_n, ascending degree.
std::vector<double> hermite_coeffs(int n);

// Normalized n-th eigenfunction of a standard mode:
//   (2^n n!)^{-1/2} (w/pi)^{1/4} H_n(sqrt(w) Q) exp(-w Q^2/2),  w = omega_eff.
ModeFunction eigenfunction_standard(const DecoupledMode& mode, int n);

struct PseudoBosonPair {
    LadderOp A;
    LadderOp B;
    double omega;  // Omega = sqrt(omega_sq)
};

// Pseudo-bosonic pair of the inverted oscillator H_IO = 1/2 (P^2 - Omega^2 Q^2):
//   A = (e^{i pi/4} Omega Q + e^{-i pi/4} d/dQ)/sqrt(2 Omega),
//   B = (e^{i pi/4} Omega Q - e^{-i pi/4} d/dQ)/sqrt(2 Omega).
// [A, B] = 1 as an operator identity, B != A^dag, and
// H_IO = i Omega (B A + 1/2). Throws std::domain_error on omega_sq <= 0.
PseudoBosonPair pseudoboson_pair(double omega_sq);

// Solves L f = 0: f = exp(-(mu/nu) Q^2 / 2). Throws
// std::invalid_argument("no differential part") when nu = 0 and
// std::invalid_argument("not tempered") when Re(-mu/nu) > 0.
ModeFunction vacuum_solve(const LadderOp& L);

// Exact action on polynomial x Gaussian:
//   L (p e^{sigma Q^2/2}) = ((mu + nu sigma) Q p + nu p') e^{sigma Q^2/2}.
ModeFunction apply_ladder(const LadderOp& L, const ModeFunction& f);

// eta_n = B^n eta_0 / sqrt(n!); polynomial degree exactly n.
ModeFunction excited_pseudo(const LadderOp& B, const ModeFunction& eta0, int n);

// Exact action of H = 1/2 (p_coeff (-d^2/dQ^2) + q_coeff Q^2); the result
// carries the same sigma.
ModeFunction hamiltonian_apply(const DecoupledMode& mode, const ModeFunction& f);

// E_{n,m} of a decoupled Hamiltonian. mode_x must be standard.
// Both standard: E = w_X (n+1/2) + sign * w_Y (m+1/2), regime Real.
// mode_y inverted: E = w_X (n+1/2) + i |p_Y| Omega (m+1/2) with
// Omega = sqrt(-q_Y/p_Y); the +i member of each conjugate eigenvalue pair is
// reported. Regime Complex.
EnergyLevel spectrum(const DecoupledHamiltonian& dec, int n, int m);

// Numerical oracle: Q and P as tridiagonal matrices in the N-dimensional
// unit-oscillator number basis (Q = (c + c^dag)/sqrt(2), P = i (c^dag - c)/sqrt(2)),
// assembled into 1/2 (p_coeff P^2 + q_coeff Q^2). N >= 2.
Eigen::MatrixXcd truncated_matrix(const DecoupledMode& mode, int N);

// Lowest k eigenvalues of the truncated matrix, ascending. For standard modes
// these converge to omega (j + 1/2) as N grows.
std::vector<double> truncated_lowest(const DecoupledMode& mode, int N, int k);

// Two-variable generalized eigenstate phi_{n,m}(X, Y) = xi_n(X) eta_m(Y).
struct TensorLevel {
    ModeFunction xi;
    ModeFunction eta;
    EnergyLevel level;

    Complex eval(Complex x, Complex y) const { return xi.eval(x) * eta.eval(y); }
};

TensorLevel tensor_level(ModeFunction xi, ModeFunction eta, EnergyLevel level);

}  // namespace lee

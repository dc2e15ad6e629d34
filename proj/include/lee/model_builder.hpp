// model_builder.hpp — the Lee-system Hamiltonian matrix h(gamma, lambda), its
// trace/determinant closed forms, the sign classification of
// f(gamma, lambda) = det h, and quadratic-Lagrangian -> Euler-Lagrange machinery.

#pragma once

#include "lee/linear_system.hpp"
#include "lee/phase_algebra.hpp"

#include <string>
#include <utility>

namespace lee {

// Couplings of the Lee system; m = k = 1 throughout.
struct ModelParams {
    double gamma;
    double lambda;
};

enum class DetSign { Positive, Negative, Zero };
enum class CaseLabel { Case1, Case2, Interior, Boundary };

struct RegionClass {
    double f;  // f(gamma, lambda) = 1 - gamma - gamma^2 - lambda^2
    DetSign det_sign;
    int negative_eigenvalue_count;
    CaseLabel case_label;
};

const char* to_string(DetSign s);
const char* to_string(CaseLabel c);

// Lagrangian L = 1/2 q'^T M q' + q'^T C q - 1/2 q^T K q with M, K symmetric.
struct QuadraticLagrangian {
    Eigen::Matrix2d M;
    Eigen::Matrix2d C;
    Eigen::Matrix2d K;
};

// Roots of 1 - gamma - gamma^2 = 0; the f < 0 region splits at these.
double gamma_minus();
double gamma_plus();

double region_f(const ModelParams& p);

// The 4x4 Hamiltonian matrix of the quantization analysis:
//   rows [2, l, 0, -1], [l, 2+g, -(1+g), 0], [0, -(1+g), 1, 0], [-1, 0, 0, 1].
QuadraticHamiltonian build_h(const ModelParams& p);

// (trace, determinant), computed numerically. For h = build_h these equal the
// closed forms (6+gamma, 1-gamma-gamma^2-lambda^2).
std::pair<double, double> trace_det(const QuadraticHamiltonian& h);

// Sign of f and the Case1/Case2 taxonomy of the f < 0 region. Boundary means
// |f| <= 1e-12. The negative-eigenvalue count comes from eigendecompose(build_h).
RegionClass classify_region(const ModelParams& p);

// Euler-Lagrange system M q" + (C - C^T) q' + K q = 0.
// Throws std::invalid_argument("degenerate kinetic term") if M is singular.
LinearSystem euler_lagrange(const QuadraticLagrangian& lag);

// Conjugate momenta of the Lee Lagrangian: maps a Lagrangian state
// (x, y, x', y') to the phase-space point (x, y, p_x, p_y) with
//   p_x = x' + (1+gamma) y,   p_y = y' + x.
Vector4 legendre_momenta(const ModelParams& p, const Vector4& lag_state);

// Inverse of the map above: velocities (x', y') from a phase-space point.
Eigen::Vector2d legendre_velocities(const ModelParams& p, const Vector4& v);

// The Lee Lagrangian: M = I, C = [[0, 1+gamma], [1, 0]], K = [[1, lambda], [lambda, 1]].
QuadraticLagrangian lee_lagrangian(const ModelParams& p);

// Bateman Lagrangian (m = k = 1): cross-kinetic M = [[0,1],[1,0]],
// C = [[0, -gamma/2], [gamma/2, 0]], K = [[0,1],[1,0]].
QuadraticLagrangian bateman_lagrangian(double gamma);

// Generic quadratic Legendre transform of a Lagrangian:
//   H = 1/2 p^T M^-1 p - p^T M^-1 C q + 1/2 q^T (K + C^T M^-1 C) q,
// returned as a QuadraticHamiltonian over (x, y, p_x, p_y). The Hamiltonian
// flow of this matrix reproduces the Euler-Lagrange trajectories for every
// parameter value; build_h coincides with it only at gamma in {0, -1} (its
// y^2 coefficient is 2+gamma rather than 1+(1+gamma)^2).
QuadraticHamiltonian legendre_hamiltonian(const QuadraticLagrangian& lag);

}  // namespace lee

// classical_dynamics.hpp — fixed-step RK4 integration of the coupled-oscillator
// systems, the conserved quantity p_lambda, and the Hamiltonian phase flow
// v' = J h v.

#pragma once

#include "lee/linear_system.hpp"
#include "lee/model_builder.hpp"
#include "lee/phase_algebra.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lee {

struct TrajectoryState {
    double t;
    Eigen::Vector2d q;     // (x, y)
    Eigen::Vector2d qdot;  // (x', y')
};

// Samples at uniform spacing; the step is T/ceil(T/dt) so the final sample
// lands on T exactly.
struct Trajectory {
    std::vector<TrajectoryState> samples;
    double dt;
};

struct PhaseSample {
    double t;
    Vector4 v;  // (x, y, p_x, p_y)
};

struct PhaseTrajectory {
    std::vector<PhaseSample> samples;
    double dt;
};

// Raised when any state entry exceeds 1e12 in magnitude during integration.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(double t_blow, const std::string& msg)
        : std::runtime_error(msg), t(t_blow) {}
    double t;
};

// The Lee system: x" + gamma y' + x = -lambda y, y" - gamma x' + y = -lambda x.
LinearSystem lee_system(const ModelParams& p);

// Bateman pair: x" + gamma x' + x = 0 (damped), y" - gamma y' + y = 0 (amplified).
LinearSystem bateman_system(double gamma);

// Coupled generalization with cross-acceleration terms; the implied mass
// matrix [[1, 2B], [2A, 1]] must be invertible (4AB != 1), else
// std::invalid_argument("degenerate mass matrix"). A = B = 0 recovers bateman.
LinearSystem generalized_system(double gamma, double A, double B);

// Classic fixed-step RK4 on the first-order form. Requires 0 < dt < T.
// Deterministic; throws BlowUpError("blow-up at t=...") past the 1e12 guard.
Trajectory integrate(const LinearSystem& sys, const TrajectoryState& s0, double dt, double T);

// p_lambda = 1/2 (x'^2 + y'^2) + 1/2 (x^2 + y^2) + lambda x y.
// Constant along every Lee trajectory, for every gamma.
double p_lambda(const TrajectoryState& s, double lambda);

// Eigenvalues of the first-order matrix F, a stability diagnostic: any
// eigenvalue with positive real part signals exponential growth.
Eigen::Vector4cd stability_eigenvalues(const LinearSystem& sys);

// RK4 on v' = J h v; the energy 1/2 v^T h v is conserved along the flow to
// integrator tolerance.
PhaseTrajectory hamilton_flow(const QuadraticHamiltonian& h, const Vector4& v0,
                              double dt, double T);

}  // namespace lee

#include "lee/classical_dynamics.hpp"

#include <cmath>
#include <sstream>

namespace lee {

namespace {

constexpr double kBlowUpLimit = 1e12;

int step_count(double dt, double T) {
    return static_cast<int>(std::ceil(T / dt - 1e-12));
}

void check_integration_args(double dt, double T) {
    if (!(dt > 0.0) || !(T > 0.0) || !(dt < T)) {
        throw std::invalid_argument("integration requires 0 < dt < T");
    }
}

[[noreturn]] void throw_blow_up(double t) {
    std::ostringstream os;
    os << "blow-up at t=" << t;
    throw BlowUpError(t, os.str());
}

// one RK4 step of u' = F u
Vector4 rk4_step(const Matrix4& F, const Vector4& u, double h) {
    const Vector4 k1 = F * u;
    const Vector4 k2 = F * (u + 0.5 * h * k1);
    const Vector4 k3 = F * (u + 0.5 * h * k2);
    const Vector4 k4 = F * (u + h * k3);
    return u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Eigen::Matrix4d LinearSystem::first_order() const {
    if (std::abs(M.determinant()) < 1e-12) {
        throw std::invalid_argument("degenerate kinetic term");
    }
    const Eigen::Matrix2d Minv = M.inverse();
    Eigen::Matrix4d F = Eigen::Matrix4d::Zero();
    F.topRightCorner<2, 2>() = Eigen::Matrix2d::Identity();
    F.bottomLeftCorner<2, 2>() = -Minv * K;
    F.bottomRightCorner<2, 2>() = -Minv * G;
    return F;
}

LinearSystem lee_system(const ModelParams& p) {
    LinearSystem sys;
    sys.M = Eigen::Matrix2d::Identity();
    sys.G << 0.0, p.gamma,
             -p.gamma, 0.0;
    sys.K << 1.0, p.lambda,
             p.lambda, 1.0;
    return sys;
}

LinearSystem bateman_system(double gamma) {
    LinearSystem sys;
    sys.M = Eigen::Matrix2d::Identity();
    sys.G << gamma, 0.0,
             0.0, -gamma;
    sys.K = Eigen::Matrix2d::Identity();
    return sys;
}

LinearSystem generalized_system(double gamma, double A, double B) {
    if (std::abs(1.0 - 4.0 * A * B) < 1e-12) {
        throw std::invalid_argument("degenerate mass matrix");
    }
    LinearSystem sys;
    sys.M << 1.0, 2.0 * B,
             2.0 * A, 1.0;
    sys.G << gamma, 0.0,
             0.0, -gamma;
    sys.K = sys.M;
    return sys;
}

Trajectory integrate(const LinearSystem& sys, const TrajectoryState& s0, double dt, double T) {
    check_integration_args(dt, T);
    const Matrix4 F = sys.first_order();
    const int n = step_count(dt, T);
    const double h = T / n;

    Trajectory traj;
    traj.dt = h;
    traj.samples.reserve(static_cast<std::size_t>(n) + 1);
    Vector4 u;
    u << s0.q(0), s0.q(1), s0.qdot(0), s0.qdot(1);
    traj.samples.push_back(TrajectoryState{0.0, s0.q, s0.qdot});
    for (int i = 1; i <= n; ++i) {
        u = rk4_step(F, u, h);
        const double t = i * h;
        if (u.cwiseAbs().maxCoeff() > kBlowUpLimit) throw_blow_up(t);
        traj.samples.push_back(
            TrajectoryState{t, {u(0), u(1)}, {u(2), u(3)}});
    }
    return traj;
}

double p_lambda(const TrajectoryState& s, double lambda) {
    return 0.5 * s.qdot.squaredNorm() + 0.5 * s.q.squaredNorm() +
           lambda * s.q(0) * s.q(1);
}

Eigen::Vector4cd stability_eigenvalues(const LinearSystem& sys) {
    const Eigen::EigenSolver<Matrix4> solver(sys.first_order());
    return solver.eigenvalues();
}

PhaseTrajectory hamilton_flow(const QuadraticHamiltonian& h, const Vector4& v0,
                              double dt, double T) {
    check_integration_args(dt, T);
    const Matrix4 F = symplectic_form() * h.h;
    const int n = step_count(dt, T);
    const double hstep = T / n;

    PhaseTrajectory traj;
    traj.dt = hstep;
    traj.samples.reserve(static_cast<std::size_t>(n) + 1);
    traj.samples.push_back(PhaseSample{0.0, v0});
    Vector4 v = v0;
    for (int i = 1; i <= n; ++i) {
        v = rk4_step(F, v, hstep);
        const double t = i * hstep;
        if (v.cwiseAbs().maxCoeff() > kBlowUpLimit) throw_blow_up(t);
        traj.samples.push_back(PhaseSample{t, v});
    }
    return traj;
}

}  // namespace lee

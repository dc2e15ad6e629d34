#include "lee/model_builder.hpp"

#include <cmath>
#include <stdexcept>

namespace lee {

namespace {
constexpr double kBoundaryTol = 1e-12;
}

const char* to_string(DetSign s) {
    switch (s) {
        case DetSign::Positive: return "positive";
        case DetSign::Negative: return "negative";
        case DetSign::Zero: return "zero";
    }
    return "?";
}

const char* to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::Interior: return "Interior";
        case CaseLabel::Boundary: return "Boundary";
    }
    return "?";
}

double gamma_minus() { return 0.5 * (-1.0 - std::sqrt(5.0)); }
double gamma_plus() { return 0.5 * (-1.0 + std::sqrt(5.0)); }

double region_f(const ModelParams& p) {
    return 1.0 - p.gamma - p.gamma * p.gamma - p.lambda * p.lambda;
}

QuadraticHamiltonian build_h(const ModelParams& p) {
    const double g = p.gamma, l = p.lambda;
    Matrix4 h;
    h << 2.0, l, 0.0, -1.0,
         l, 2.0 + g, -(1.0 + g), 0.0,
         0.0, -(1.0 + g), 1.0, 0.0,
         -1.0, 0.0, 0.0, 1.0;
    return QuadraticHamiltonian{h};
}

std::pair<double, double> trace_det(const QuadraticHamiltonian& h) {
    return {h.h.trace(), h.h.determinant()};
}

RegionClass classify_region(const ModelParams& p) {
    RegionClass rc;
    rc.f = region_f(p);
    const EigenDecomposition dec = eigendecompose(build_h(p));
    rc.negative_eigenvalue_count = 0;
    for (int j = 0; j < 4; ++j) {
        if (dec.eigenvalues(j) < 0.0) ++rc.negative_eigenvalue_count;
    }
    if (std::abs(rc.f) <= kBoundaryTol) {
        rc.det_sign = DetSign::Zero;
        rc.case_label = CaseLabel::Boundary;
    } else if (rc.f > 0.0) {
        rc.det_sign = DetSign::Positive;
        rc.case_label = CaseLabel::Interior;
    } else {
        rc.det_sign = DetSign::Negative;
        // f < 0 splits along gamma: outside (gamma-, gamma+) any lambda works
        rc.case_label = (p.gamma <= gamma_minus() || p.gamma >= gamma_plus())
                            ? CaseLabel::Case1
                            : CaseLabel::Case2;
    }
    return rc;
}

LinearSystem euler_lagrange(const QuadraticLagrangian& lag) {
    if ((lag.M - lag.M.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
        (lag.K - lag.K.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("euler_lagrange: M and K must be symmetric");
    }
    if (std::abs(lag.M.determinant()) < 1e-12) {
        throw std::invalid_argument("degenerate kinetic term");
    }
    return LinearSystem{lag.M, lag.C - lag.C.transpose(), lag.K};
}

Vector4 legendre_momenta(const ModelParams& p, const Vector4& lag_state) {
    const double x = lag_state(0), y = lag_state(1);
    const double xd = lag_state(2), yd = lag_state(3);
    Vector4 v;
    v << x, y, xd + (1.0 + p.gamma) * y, yd + x;
    return v;
}

Eigen::Vector2d legendre_velocities(const ModelParams& p, const Vector4& v) {
    return {v(2) - (1.0 + p.gamma) * v(1), v(3) - v(0)};
}

QuadraticLagrangian lee_lagrangian(const ModelParams& p) {
    QuadraticLagrangian lag;
    lag.M = Eigen::Matrix2d::Identity();
    lag.C << 0.0, 1.0 + p.gamma,
             1.0, 0.0;
    lag.K << 1.0, p.lambda,
             p.lambda, 1.0;
    return lag;
}

QuadraticLagrangian bateman_lagrangian(double gamma) {
    QuadraticLagrangian lag;
    lag.M << 0.0, 1.0,
             1.0, 0.0;
    lag.C << 0.0, -0.5 * gamma,
             0.5 * gamma, 0.0;
    lag.K << 0.0, 1.0,
             1.0, 0.0;
    return lag;
}

QuadraticHamiltonian legendre_hamiltonian(const QuadraticLagrangian& lag) {
    if (std::abs(lag.M.determinant()) < 1e-12) {
        throw std::invalid_argument("degenerate kinetic term");
    }
    const Eigen::Matrix2d Minv = lag.M.inverse();
    Matrix4 h = Matrix4::Zero();
    h.topLeftCorner<2, 2>() = lag.K + lag.C.transpose() * Minv * lag.C;
    h.bottomRightCorner<2, 2>() = Minv;
    h.topRightCorner<2, 2>() = -(Minv * lag.C).transpose();
    h.bottomLeftCorner<2, 2>() = -Minv * lag.C;
    return QuadraticHamiltonian::from_matrix(h);
}

}  // namespace lee

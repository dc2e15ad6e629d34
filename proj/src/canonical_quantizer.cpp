#include "lee/canonical_quantizer.hpp"

#include <cmath>
#include <stdexcept>

namespace lee {

namespace {

constexpr double kTol = 1e-12;  // structure matching on tables

// the table must be purely imaginary for any real transform
bool imaginary_entries(const CommutatorTable& table) {
    return table.t.real().cwiseAbs().maxCoeff() <= kTol;
}

}  // namespace

DecoupledMode DecoupledMode::make(double p, double q) {
    if (p > 0.0 && q > 0.0) return DecoupledMode{p, q, ModeRegime::Standard};
    if (p * q < 0.0) return DecoupledMode{p, q, ModeRegime::Inverted};
    throw std::invalid_argument("mode is neither standard nor inverted");
}

double DecoupledMode::omega() const {
    if (regime != ModeRegime::Standard) {
        throw std::invalid_argument("not a standard mode");
    }
    return std::sqrt(p_coeff * q_coeff);
}

bool bopp_admissible(const CommutatorTable& table) {
    if (!imaginary_entries(table)) return false;
    const double t12 = table.im(0, 1), t13 = table.im(0, 2);
    const double t14 = table.im(0, 3), t23 = table.im(1, 2);
    const double t24 = table.im(1, 3), t34 = table.im(2, 3);
    if (std::abs(t14) > kTol || std::abs(t23) > kTol) return false;
    if (std::abs(t12) <= kTol || std::abs(t13) <= kTol ||
        std::abs(t24) <= kTol || std::abs(t34) <= kTol) return false;
    return std::abs(t12 - t34) <= kTol && std::abs(t13 + t24) <= kTol;
}

bool relabel_admissible(const CommutatorTable& table) {
    if (!imaginary_entries(table)) return false;
    for (int j = 0; j < 4; ++j) {
        for (int k = j + 1; k < 4; ++k) {
            const double expect = (j == 0 && k == 2) ? -1.0
                                : (j == 1 && k == 3) ? 1.0
                                                     : 0.0;
            if (std::abs(table.im(j, k) - expect) > kTol) return false;
        }
    }
    return true;
}

BoppSolution solve_bopp(const CommutatorTable& table, double b3, double b4) {
    if (b3 == 0.0 || b4 == 0.0) throw std::invalid_argument("degenerate shift");
    if (!bopp_admissible(table)) throw std::invalid_argument("ansatz inadmissible");
    const double t12 = table.im(0, 1), t13 = table.im(0, 2);
    const double t24 = table.im(1, 3), t34 = table.im(2, 3);
    BoppSolution s;
    s.a1 = 0.0;
    s.a4 = 0.0;
    s.b3 = b3;
    s.b4 = b4;
    s.b1 = -t13 / b3;
    s.b2 = -t24 / b4;
    s.a3 = -t34 / b4;
    s.a2 = -t12 / s.b1;
    return s;
}

Matrix4 bopp_matrix(const BoppSolution& b) {
    Matrix4 w;
    w << b.a1, 0.0, 0.0, b.b1,
         0.0, b.a2, b.b2, 0.0,
         0.0, b.b3, b.a3, 0.0,
         b.b4, 0.0, 0.0, b.a4;
    return w;
}

DecoupledHamiltonian decouple_case1(const Vector4& hd_diag, const BoppSolution& bopp) {
    const Matrix4 w = bopp_matrix(bopp);
    const Matrix4 m = w.transpose() * hd_diag.asDiagonal() * w;
    double cross = 0.0;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (j != k) cross = std::max(cross, std::abs(m(j, k)));
        }
    }
    if (cross > 1e-12) throw std::runtime_error("decoupling failed");
    DecoupledHamiltonian dec;
    dec.mode_x = DecoupledMode::make(m(2, 2), m(0, 0));
    dec.mode_y = DecoupledMode::make(m(3, 3), m(1, 1));
    dec.relative_sign = 1;
    return dec;
}

DecoupledHamiltonian relabel_case2(const CommutatorTable& table, const Vector4& hd_diag) {
    if (!relabel_admissible(table)) {
        throw std::invalid_argument("not directly canonical");
    }
    // X = Pt_X, P_X = Xt, Y = Yt, P_Y = Pt_Y turns the Hamiltonian into
    //   1/2 (E1 P_X^2 + E3 X^2) + 1/2 (E4 P_Y^2 + E2 Y^2).
    DecoupledHamiltonian dec;
    dec.mode_x = DecoupledMode::make(hd_diag(0), hd_diag(2));
    if (hd_diag(3) < 0.0) {
        dec.relative_sign = -1;
        dec.mode_y = DecoupledMode::make(-hd_diag(3), -hd_diag(1));
    } else {
        dec.relative_sign = 1;
        dec.mode_y = DecoupledMode::make(hd_diag(3), hd_diag(1));
    }
    return dec;
}

bool verify_canonical(const CommutatorTable& table) {
    if (!imaginary_entries(table)) return false;
    for (int j = 0; j < 4; ++j) {
        for (int k = j + 1; k < 4; ++k) {
            const double expect = (j == 0 && k == 2) ? 1.0
                                : (j == 1 && k == 3) ? 1.0
                                                     : 0.0;
            if (std::abs(table.im(j, k) - expect) > kTol) return false;
        }
    }
    return true;
}

}  // namespace lee

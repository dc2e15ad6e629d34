#include "lee/spectral_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace lee {

namespace {
constexpr double kSigmaTol = 1e-12;  // tempered band for Re(sigma)
}

// ---------------------------- ComplexPoly -----------------------------------

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    trim();
}

ComplexPoly ComplexPoly::constant(Complex c) {
    return ComplexPoly(std::vector<Complex>{c});
}

void ComplexPoly::trim() {
    while (!c_.empty() && c_.back() == Complex(0.0, 0.0)) c_.pop_back();
}

Complex ComplexPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Complex(0.0, 0.0);
    return c_[static_cast<std::size_t>(k)];
}

Complex ComplexPoly::eval(Complex q) const {
    Complex acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

ComplexPoly ComplexPoly::derivative() const {
    if (c_.size() <= 1) return ComplexPoly();
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d[k - 1] = c_[k] * static_cast<double>(k);
    }
    return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::times_q() const {
    if (c_.empty()) return ComplexPoly();
    std::vector<Complex> s(c_.size() + 1, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < c_.size(); ++k) s[k + 1] = c_[k];
    return ComplexPoly(std::move(s));
}

ComplexPoly ComplexPoly::scaled(Complex s) const {
    std::vector<Complex> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = s * c_[k];
    return ComplexPoly(std::move(out));
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<Complex> out(std::max(a.c_.size(), b.c_.size()), Complex(0.0, 0.0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
    return ComplexPoly(std::move(out));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<Complex> out(std::max(a.c_.size(), b.c_.size()), Complex(0.0, 0.0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
    return ComplexPoly(std::move(out));
}

// ------------------------------ LadderOp ------------------------------------

LadderOp LadderOp::make(Complex mu, Complex nu) {
    if (mu == Complex(0.0, 0.0) && nu == Complex(0.0, 0.0)) {
        throw std::invalid_argument("LadderOp: mu and nu cannot both vanish");
    }
    return LadderOp{mu, nu};
}

LadderOp LadderOp::adjoint() const {
    return LadderOp{std::conj(mu), -std::conj(nu)};
}

// ----------------------------- ModeFunction ---------------------------------

ModeFunction ModeFunction::make(ComplexPoly poly, Complex sigma) {
    if (sigma.real() > kSigmaTol) throw std::invalid_argument("not tempered");
    const ModeClass tag =
        (sigma.real() < -kSigmaTol) ? ModeClass::Normalizable : ModeClass::Tempered;
    return ModeFunction{std::move(poly), sigma, tag};
}

Complex ModeFunction::eval(Complex q) const {
    return poly.eval(q) * std::exp(0.5 * sigma * q * q);
}

// --------------------------- standard ladders -------------------------------

StandardLadder standard_ladder(const DecoupledMode& mode) {
    if (mode.regime != ModeRegime::Standard) {
        throw std::invalid_argument("not a standard mode");
    }
    const double A = mode.p_coeff, B = mode.q_coeff;
    const double alpha = std::pow(B / A, 0.25);
    const double r = 1.0 / std::sqrt(2.0);
    StandardLadder out;
    out.omega     = std::sqrt(A * B);
    out.omega_eff = alpha * alpha;
    out.a    = LadderOp{Complex(alpha * r, 0.0), Complex(r / alpha, 0.0)};
    out.adag = LadderOp{Complex(alpha * r, 0.0), Complex(-r / alpha, 0.0)};
    return out;
}

double hermite(int n, double x) {
    if (n == 0) return 1.0;
    double hm = 1.0, h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = next;
    }
    return h;
}

std::vector<double> hermite_coeffs(int n) {
    std::vector<double> hm{1.0};
    if (n == 0) return hm;
    std::vector<double> h{0.0, 2.0};
    for (int k = 1; k < n; ++k) {
        std::vector<double> next(static_cast<std::size_t>(k) + 2, 0.0);
        for (std::size_t j = 0; j < h.size(); ++j) next[j + 1] += 2.0 * h[j];
        for (std::size_t j = 0; j < hm.size(); ++j) next[j] -= 2.0 * k * hm[j];
        hm = std::move(h);
        h = std::move(next);
    }
    return h;
}

ModeFunction eigenfunction_standard(const DecoupledMode& mode, int n) {
    if (n < 0) throw std::invalid_argument("eigenfunction_standard: n must be >= 0");
    const StandardLadder lad = standard_ladder(mode);
    const double w = lad.omega_eff;
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    const double norm =
        std::pow(w / M_PI, 0.25) / std::sqrt(std::pow(2.0, n) * fact);
    const std::vector<double> hc = hermite_coeffs(n);
    std::vector<Complex> coeffs(hc.size());
    const double root_w = std::sqrt(w);
    double scale = norm;  // norm * root_w^k
    for (std::size_t k = 0; k < hc.size(); ++k) {
        coeffs[k] = Complex(hc[k] * scale, 0.0);
        scale *= root_w;
    }
    return ModeFunction::make(ComplexPoly(std::move(coeffs)), Complex(-w, 0.0));
}

// ----------------------------- pseudo-bosons --------------------------------

PseudoBosonPair pseudoboson_pair(double omega_sq) {
    if (omega_sq <= 0.0) throw std::domain_error("Omega^2 must be positive");
    const double omega = std::sqrt(omega_sq);
    // e^{i pi/4} = (1 + i)/sqrt(2); shared sub-products keep the A-vacuum exact
    const double e = std::sqrt(0.5);
    const double t = e / std::sqrt(2.0 * omega);  // |nu|-component
    const double u = t * omega;                   // |mu|-component
    PseudoBosonPair out;
    out.omega = omega;
    out.A = LadderOp{Complex(u, u), Complex(t, -t)};
    out.B = LadderOp{Complex(u, u), Complex(-t, t)};
    return out;
}

ModeFunction vacuum_solve(const LadderOp& L) {
    if (L.nu == Complex(0.0, 0.0)) {
        throw std::invalid_argument("no differential part");
    }
    const Complex sigma = -(L.mu / L.nu);
    return ModeFunction::make(ComplexPoly::constant(Complex(1.0, 0.0)), sigma);
}

ModeFunction apply_ladder(const LadderOp& L, const ModeFunction& f) {
    const Complex g = L.mu + L.nu * f.sigma;
    const ComplexPoly out = f.poly.times_q().scaled(g) + f.poly.derivative().scaled(L.nu);
    ModeFunction r;
    r.poly = out;
    r.sigma = f.sigma;
    r.class_tag = f.class_tag;
    return r;
}

ModeFunction excited_pseudo(const LadderOp& B, const ModeFunction& eta0, int n) {
    if (n < 0) throw std::invalid_argument("excited_pseudo: n must be >= 0");
    ModeFunction f = eta0;
    for (int k = 1; k <= n; ++k) {
        f = apply_ladder(B, f);
        f.poly = f.poly.scaled(Complex(1.0 / std::sqrt(static_cast<double>(k)), 0.0));
    }
    return f;
}

ModeFunction hamiltonian_apply(const DecoupledMode& mode, const ModeFunction& f) {
    const double A = mode.p_coeff, B = mode.q_coeff;
    const Complex sigma = f.sigma;
    // H (p e^{s Q^2/2}) = 1/2 (-A p'' - 2 A s Q p' - A s p + (B - A s^2) Q^2 p) e^{s Q^2/2}
    const Complex c2 = Complex(B, 0.0) - A * (sigma * sigma);
    const int deg = f.poly.degree();
    std::vector<Complex> out(static_cast<std::size_t>(std::max(deg + 3, 1)), Complex(0.0, 0.0));
    for (int k = 0; k <= deg; ++k) {
        const Complex pk = f.poly.coeff(k);
        out[static_cast<std::size_t>(k + 2)] += 0.5 * (c2 * pk);
        out[static_cast<std::size_t>(k)] += 0.5 * (-A * sigma * (2.0 * k + 1.0) * pk);
        if (k >= 2) {
            out[static_cast<std::size_t>(k - 2)] +=
                0.5 * (-A * (static_cast<double>(k) * (k - 1.0)) * pk);
        }
    }
    ModeFunction r;
    r.poly = ComplexPoly(std::move(out));
    r.sigma = sigma;
    r.class_tag = f.class_tag;
    return r;
}

// ------------------------------- spectrum -----------------------------------

EnergyLevel spectrum(const DecoupledHamiltonian& dec, int n, int m) {
    if (dec.mode_x.regime != ModeRegime::Standard) {
        throw std::invalid_argument("not a standard mode");
    }
    if (n < 0 || m < 0) throw std::invalid_argument("spectrum: n, m must be >= 0");
    const double wx = dec.mode_x.omega();
    const double re_x = wx * (n + 0.5);
    if (dec.mode_y.regime == ModeRegime::Standard) {
        const double wy = dec.mode_y.omega();
        return EnergyLevel{n, m, Complex(re_x + dec.relative_sign * wy * (m + 0.5), 0.0),
                           EnergyRegime::Real};
    }
    // inverted mode: H_Y = p_Y * H_IO with Omega^2 = -q_Y/p_Y; generalized
    // eigenvalues come in conjugate pairs, the +i branch is reported
    const double p = dec.mode_y.p_coeff, q = dec.mode_y.q_coeff;
    const double kappa = std::abs(p) * std::sqrt(-q / p);
    return EnergyLevel{n, m, Complex(re_x, kappa * (m + 0.5)), EnergyRegime::Complex};
}

// --------------------------- truncated oracle -------------------------------

Eigen::MatrixXcd truncated_matrix(const DecoupledMode& mode, int N) {
    if (N < 2) throw std::invalid_argument("truncated_matrix: N must be >= 2");
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(N, N);
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(N, N);
    for (int k = 1; k < N; ++k) {
        const double r = std::sqrt(0.5 * k);
        Q(k - 1, k) = r;
        Q(k, k - 1) = r;
        P(k, k - 1) = Complex(0.0, r);
        P(k - 1, k) = Complex(0.0, -r);
    }
    Eigen::MatrixXcd H = 0.5 * (mode.p_coeff * (P * P) + mode.q_coeff * (Q * Q).cast<Complex>());
    return H;
}

std::vector<double> truncated_lowest(const DecoupledMode& mode, int N, int k) {
    const Eigen::MatrixXcd H = truncated_matrix(mode, N);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k && j < N; ++j) out.push_back(solver.eigenvalues()(j));
    return out;
}

TensorLevel tensor_level(ModeFunction xi, ModeFunction eta, EnergyLevel level) {
    return TensorLevel{std::move(xi), std::move(eta), level};
}

}  // namespace lee

#include "lee/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lee {

namespace {

const char* to_string(ModeRegime r) {
    return r == ModeRegime::Standard ? "standard" : "inverted";
}

const char* to_string(EnergyRegime r) {
    return r == EnergyRegime::Real ? "real" : "complex";
}

const char* to_string(ModeClass c) {
    return c == ModeClass::Normalizable ? "normalizable" : "tempered";
}

std::string pair_json(Complex z) {
    return "[" + fmt_double(z.real()) + ", " + fmt_double(z.imag()) + "]";
}

std::string matrix_json(const Matrix4& m) {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < 4; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < 4; ++c) os << (c ? ", " : "") << fmt_double(m(r, c));
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string ctable_json(const CMatrix4& m) {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < 4; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < 4; ++c) os << (c ? ", " : "") << pair_json(m(r, c));
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string mode_json(const DecoupledMode& m) {
    std::ostringstream os;
    os << "{\"pCoeff\": " << fmt_double(m.p_coeff)
       << ", \"qCoeff\": " << fmt_double(m.q_coeff)
       << ", \"regime\": \"" << to_string(m.regime) << "\"}";
    return os.str();
}

std::string level_json(const EnergyLevel& e) {
    std::ostringstream os;
    os << "{\"n\": " << e.n << ", \"m\": " << e.m
       << ", \"re\": " << fmt_double(e.value.real())
       << ", \"im\": " << fmt_double(e.value.imag())
       << ", \"regime\": \"" << to_string(e.regime) << "\"}";
    return os.str();
}

}  // namespace

std::string fmt_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value in output");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string trajectory_csv(const Trajectory& traj, double lambda, int stride) {
    if (stride < 1) throw std::invalid_argument("stride must be >= 1");
    std::ostringstream os;
    os << "t,x,y,xdot,ydot,p_lambda\n";
    for (std::size_t i = 0; i < traj.samples.size(); i += static_cast<std::size_t>(stride)) {
        const TrajectoryState& s = traj.samples[i];
        os << fmt_double(s.t) << ',' << fmt_double(s.q(0)) << ',' << fmt_double(s.q(1))
           << ',' << fmt_double(s.qdot(0)) << ',' << fmt_double(s.qdot(1))
           << ',' << fmt_double(p_lambda(s, lambda)) << '\n';
    }
    return os.str();
}

std::string bopp_json(const BoppSolution& b) {
    std::ostringstream os;
    os << "{\"a1\": " << fmt_double(b.a1) << ", \"a2\": " << fmt_double(b.a2)
       << ", \"a3\": " << fmt_double(b.a3) << ", \"a4\": " << fmt_double(b.a4)
       << ", \"b1\": " << fmt_double(b.b1) << ", \"b2\": " << fmt_double(b.b2)
       << ", \"b3\": " << fmt_double(b.b3) << ", \"b4\": " << fmt_double(b.b4)
       << ", \"freeParams\": {\"b3\": " << fmt_double(b.b3)
       << ", \"b4\": " << fmt_double(b.b4) << "}}";
    return os.str();
}

std::string decoupled_json(const DecoupledHamiltonian& d) {
    std::ostringstream os;
    os << "{\"modeX\": " << mode_json(d.mode_x)
       << ", \"modeY\": " << mode_json(d.mode_y)
       << ", \"relativeSign\": " << d.relative_sign << "}";
    return os.str();
}

std::string spectrum_json(const std::vector<EnergyLevel>& levels) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < levels.size(); ++i) {
        os << (i ? ",\n " : "") << level_json(levels[i]);
    }
    os << "]";
    return os.str();
}

std::string eigenfunction_json(const ModeFunction& f) {
    std::ostringstream os;
    os << "{\"polyCoeffs\": [";
    const int deg = f.poly.degree();
    for (int k = 0; k <= deg; ++k) {
        os << (k ? ", " : "") << pair_json(f.poly.coeff(k));
    }
    os << "], \"sigmaRe\": " << fmt_double(f.sigma.real())
       << ", \"sigmaIm\": " << fmt_double(f.sigma.imag())
       << ", \"classTag\": \"" << to_string(f.class_tag) << "\"}";
    return os.str();
}

std::string run_report_json(const RunReport& r) {
    std::ostringstream os;
    os << "{\n";
    os << " \"params\": {\"gamma\": " << fmt_double(r.params.gamma)
       << ", \"lambda\": " << fmt_double(r.params.lambda) << "},\n";
    os << " \"hMatrix\": " << matrix_json(r.h) << ",\n";
    os << " \"traceDet\": {\"trace\": " << fmt_double(r.trace)
       << ", \"det\": " << fmt_double(r.det) << "},\n";
    os << " \"eigenvalues\": [";
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << fmt_double(r.eigenvalues(j));
    os << "],\n";
    os << " \"regionClass\": {\"f\": " << fmt_double(r.region.f)
       << ", \"detSign\": \"" << to_string(r.region.det_sign)
       << "\", \"negativeEigenvalueCount\": " << r.region.negative_eigenvalue_count
       << ", \"caseLabel\": \"" << to_string(r.region.case_label) << "\"},\n";
    os << " \"S\": " << matrix_json(r.S) << ",\n";
    os << " \"fixtureUsed\": " << (r.fixture_used ? "true" : "false") << ",\n";
    os << " \"commutatorTable\": " << ctable_json(r.table) << ",\n";
    os << " \"pipelineBranch\": \"" << to_string(r.branch) << "\"";
    if (r.bopp) os << ",\n \"boppSolution\": " << bopp_json(*r.bopp);
    if (r.branch == PipelineBranch::Relabel) {
        os << ",\n \"relabeling\": {\"X\": \"Ptilde_X\", \"P_X\": \"Xtilde\", "
              "\"Y\": \"Ytilde\", \"P_Y\": \"Ptilde_Y\"}";
    }
    if (r.decoupled) os << ",\n \"decoupled\": " << decoupled_json(*r.decoupled);
    if (!r.spectrum_sample.empty()) {
        os << ",\n \"spectrumSample\": " << spectrum_json(r.spectrum_sample);
    }
    os << "\n}\n";
    return os.str();
}

}  // namespace lee

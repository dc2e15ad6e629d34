#include "lee/pipeline.hpp"

#include "lee/io.hpp"

#include <sstream>
#include <stdexcept>

namespace lee {

const char* to_string(PipelineBranch b) {
    switch (b) {
        case PipelineBranch::Bopp: return "bopp";
        case PipelineBranch::Relabel: return "relabel";
        case PipelineBranch::Unsupported: return "unsupported";
    }
    return "?";
}

RunReport run_quantize_pipeline(const ModelParams& params,
                                const std::optional<Matrix4>& fixture_S,
                                double b3, double b4, int sample_max) {
    RunReport r;
    r.params = params;
    const QuadraticHamiltonian h = build_h(params);
    r.h = h.h;
    const auto td = trace_det(h);
    r.trace = td.first;
    r.det = td.second;
    r.region = classify_region(params);

    if (fixture_S) {
        r.S = *fixture_S;
        r.fixture_used = true;
        const Matrix4 hd = r.S * h.h * r.S.transpose();
        double offdiag = 0.0;
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                if (j != k) offdiag = std::max(offdiag, std::abs(hd(j, k)));
            }
        }
        if (offdiag > 1e-8) {
            std::ostringstream os;
            os << "fixture does not diagonalize h(gamma=" << params.gamma
               << ", lambda=" << params.lambda << "); off-diagonal " << offdiag;
            throw std::runtime_error(os.str());
        }
        r.eigenvalues = hd.diagonal();
    } else {
        const EigenDecomposition dec = eigendecompose(h);
        r.S = dec.S;
        r.fixture_used = false;
        r.eigenvalues = dec.eigenvalues;
    }

    const CommutatorTable table = transform_commutators(r.S);
    r.table = table.t;

    r.branch = PipelineBranch::Unsupported;
    if (relabel_admissible(table)) {
        r.decoupled = relabel_case2(table, r.eigenvalues);
        r.branch = PipelineBranch::Relabel;
    } else if (bopp_admissible(table)) {
        try {
            const BoppSolution bopp = solve_bopp(table, b3, b4);
            r.decoupled = decouple_case1(r.eigenvalues, bopp);
            r.bopp = bopp;
            r.branch = PipelineBranch::Bopp;
        } catch (const std::runtime_error&) {
            // admissible table but the diagonal does not decouple
            r.decoupled.reset();
            r.bopp.reset();
        }
    }

    if (r.decoupled && r.decoupled->mode_x.regime == ModeRegime::Standard) {
        for (int n = 0; n <= sample_max; ++n) {
            for (int m = 0; m <= sample_max; ++m) {
                r.spectrum_sample.push_back(spectrum(*r.decoupled, n, m));
            }
        }
    }
    return r;
}

std::string region_sweep_csv(double gamma_min, double gamma_max,
                             double lambda_min, double lambda_max, int steps) {
    if (steps < 2) throw std::invalid_argument("region sweep needs steps >= 2");
    if (gamma_min > gamma_max || lambda_min > lambda_max) {
        throw std::invalid_argument("malformed range");
    }
    std::ostringstream os;
    os << "gamma,lambda,f,det_sign,neg_count,case_label\n";
    for (int i = 0; i < steps; ++i) {
        const double g = gamma_min + i * (gamma_max - gamma_min) / (steps - 1);
        for (int j = 0; j < steps; ++j) {
            const double l = lambda_min + j * (lambda_max - lambda_min) / (steps - 1);
            const RegionClass rc = classify_region({g, l});
            os << fmt_double(g) << ',' << fmt_double(l) << ',' << fmt_double(rc.f)
               << ',' << to_string(rc.det_sign) << ',' << rc.negative_eigenvalue_count
               << ',' << to_string(rc.case_label) << '\n';
        }
    }
    return os.str();
}

}  // namespace lee

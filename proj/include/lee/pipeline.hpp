// pipeline.hpp — the end-to-end quantization pipeline behind the CLI:
// build_h -> diagonalize (or load a fixture S) -> commutator table -> branch
// into the Bopp-shift or relabeling path -> decoupled modes -> spectrum sample.

#pragma once

#include "lee/canonical_quantizer.hpp"
#include "lee/model_builder.hpp"
#include "lee/spectral_engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lee {

enum class PipelineBranch { Bopp, Relabel, Unsupported };

const char* to_string(PipelineBranch b);

struct RunReport {
    ModelParams params;
    Matrix4 h;
    double trace;
    double det;
    Vector4 eigenvalues;  // diagonal of S h S^T, in row order of S
    RegionClass region;
    Matrix4 S;
    bool fixture_used;
    CMatrix4 table;
    PipelineBranch branch;
    std::optional<BoppSolution> bopp;
    std::optional<DecoupledHamiltonian> decoupled;
    std::vector<EnergyLevel> spectrum_sample;  // n, m <= sample_max
};

// Runs the pipeline. When fixture_S is given it replaces the eigensolver
// output and must diagonalize build_h(params) (off-diagonals of S h S^T below
// 1e-8), else std::runtime_error. b3, b4 feed the Bopp branch.
RunReport run_quantize_pipeline(const ModelParams& params,
                                const std::optional<Matrix4>& fixture_S,
                                double b3, double b4, int sample_max = 3);

// Grid sweep of classify_region; steps points per axis, gamma outer loop.
// CSV columns: gamma,lambda,f,det_sign,neg_count,case_label.
std::string region_sweep_csv(double gamma_min, double gamma_max,
                             double lambda_min, double lambda_max, int steps);

}  // namespace lee

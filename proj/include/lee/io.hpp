// io.hpp — deterministic machine-readable output. JSON is emitted with stable
// key order and every number formatted to 17 significant digits so identical
// inputs always produce identical bytes; CSV uses the same number format.

#pragma once

#include "lee/canonical_quantizer.hpp"
#include "lee/classical_dynamics.hpp"
#include "lee/pipeline.hpp"
#include "lee/spectral_engine.hpp"

#include <string>
#include <vector>

namespace lee {

// "%.17g"; rejects non-finite values.
std::string fmt_double(double x);

// Rows t,x,y,xdot,ydot,p_lambda, one per sample (or per stride samples).
std::string trajectory_csv(const Trajectory& traj, double lambda, int stride = 1);

// {"a1": ..., ..., "b4": ..., "freeParams": {"b3": ..., "b4": ...}}
std::string bopp_json(const BoppSolution& b);

// {"modeX": {"pCoeff","qCoeff","regime"}, "modeY": {...}, "relativeSign": +-1}
std::string decoupled_json(const DecoupledHamiltonian& d);

// JSON array of {"n","m","re","im","regime"}.
std::string spectrum_json(const std::vector<EnergyLevel>& levels);

// {"polyCoeffs": [[re, im], ...], "sigmaRe", "sigmaIm", "classTag"}
std::string eigenfunction_json(const ModeFunction& f);

// Full pipeline report; optional fields appear only on their branch.
std::string run_report_json(const RunReport& r);

}  // namespace lee

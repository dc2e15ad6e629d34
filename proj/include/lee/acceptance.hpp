// acceptance.hpp — the fixture verification suite shared by `leeq verify` and
// the acceptance test binary. Each check pins one reproducible fact about the
// two reference cases (matrices, spectra, commutator tables, shift
// coefficients, decoupled modes, ladder identities, conservation laws) at a
// stated tolerance.

#pragma once

#include "lee/phase_algebra.hpp"

#include <string>
#include <vector>

namespace lee {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // measured residuals / values
};

struct FixtureSet {
    Matrix4 case1_S;
    Matrix4 case2_S;
};

std::vector<CheckResult> run_acceptance_checks(const FixtureSet& fx);

}  // namespace lee

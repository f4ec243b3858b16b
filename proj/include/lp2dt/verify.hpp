#pragma once

#include "lp2dt/invariants.hpp"

#include <string>
#include <vector>

namespace lp2dt {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    int order = 20;          // series identity order
    std::vector<int> bs = {0, -2, -4, -6};  // even values for cross-formula checks
    bool include_ex_toric = true;
};

// The identity and property suite: series identities, the worked section
// counts, level-independence, agreement of the wall-crossing and strata
// formulas, stratum chi against the finite-field oracle, and the
// slope-stable sector against the closed-form series.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace lp2dt

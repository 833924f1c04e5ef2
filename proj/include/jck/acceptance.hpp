#pragma once

// The machine-checkable certificate suite: ten identity/certificate checks
// covering bound combinatorics, the Jordan core identities, conformal
// automorphisms, three-point cubics, Cremona involutions, the variety
// parametrizations, the secant solver and the scroll dichotomy.

#include "jck/config.hpp"

#include <string>
#include <vector>

namespace jck {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(const RunConfig& cfg = RunConfig{});

} // namespace jck

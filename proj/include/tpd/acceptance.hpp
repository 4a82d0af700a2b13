#pragma once

#include "tpd/config.hpp"

#include <string>
#include <vector>

namespace tpd {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    // Failure is plausibly a Monte-Carlo artifact (too few or disagreeing
    // trials) rather than a wrong value.
    bool mc_disagreement = false;
    std::string detail;
};

// Runs the ten acceptance criteria at their pinned tolerances.
std::vector<CriterionResult> run_acceptance(const Config& cfg);

// 0 all pass; 3 only Monte-Carlo disagreements failed; 4 otherwise.
int acceptance_exit_code(const std::vector<CriterionResult>& results);

} // namespace tpd

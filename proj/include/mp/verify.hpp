#pragma once

#include <string>
#include <vector>

namespace mp {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full verification suite. Results are deterministic and
// independent of the worker count.
std::vector<CriterionResult> run_acceptance(int workers = 1);

std::string acceptance_report(const std::vector<CriterionResult>& results);

}  // namespace mp

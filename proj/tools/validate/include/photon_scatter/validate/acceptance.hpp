#pragma once

#include <string>
#include <vector>

namespace photon_scatter::validate {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

constexpr int kCriterionCount = 11;

/// Runs one acceptance criterion (1..kCriterionCount). Exceptions thrown by
/// the library are caught and reported as failures.
CriterionResult run_criterion(int id);

/// Runs the listed criteria, or all of them when `ids` is empty.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

/// "[PASS] 3 total-reflection: transmission=1.2e-4 (< 1e-2)"
std::string format_result(const CriterionResult& r);

}  // namespace photon_scatter::validate

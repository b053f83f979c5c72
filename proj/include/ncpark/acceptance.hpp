#pragma once

#include <string>

namespace ncpark {

inline constexpr int kAcceptanceCriteria = 12;
// The cap at which every criterion runs over its full range.
inline constexpr int kAcceptanceFullCap = 7;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;  // what was checked, or the first failure
    double seconds = 0;
};

// Runs criterion id (1..12) with every size parameter capped at n_cap.
// Exceptions thrown by the checks are reported as failures.
// Throws std::out_of_range for an unknown id or n_cap < 1.
CriterionResult run_criterion(int id, int n_cap = kAcceptanceFullCap);

// "[PASS] criterion 3: title (detail, 1.2 s)".
std::string format_result(const CriterionResult& r);

}  // namespace ncpark

// Runs every acceptance criterion over its full range and prints one line each.

#include <iostream>

#include "ncpark/acceptance.hpp"

int main() {
    int failed = 0;
    for (int id = 1; id <= ncpark::kAcceptanceCriteria; ++id) {
        ncpark::CriterionResult r = ncpark::run_criterion(id);
        std::cout << ncpark::format_result(r) << std::endl;
        if (!r.passed) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}

// Acceptance battery: runs all twelve checks (no fail-fast), one line each.
#include <iostream>

#include "mdq/suite.hpp"

int main() {
    std::vector<mdq::CheckResult> results = mdq::run_suite(false, std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

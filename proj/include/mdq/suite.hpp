// The twelve-check verification suite: each check is a self-contained
// pass/fail run with a frozen tolerance, shared by the CLI `suite` command
// (fail-fast) and the acceptance binary (run-all).
#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mdq {

struct CheckResult {
    std::string name;
    bool passed = false;
    double elapsed_s = 0;
    std::string detail;  // one-line summary: worst residuals, counts, ...
};

struct CheckSpec {
    std::string name;
    std::function<CheckResult()> run;
};

// The checks in fixed order (01..12).
std::vector<CheckSpec> suite_checks();

// Run all checks (fail_fast=false) or stop at the first failure.
std::vector<CheckResult> run_suite(bool fail_fast, std::ostream& log);

}  // namespace mdq

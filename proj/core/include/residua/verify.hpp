#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace residua {

// Self-verification suites: each suite is a fixed list of named checks that
// recompute library results against independent oracles (built-in reference
// tables, brute-force counts, closed-form formulas).  A failing check is
// report content, never an exception; exceptions inside a check are caught
// and reported as failures.

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // summary on pass, counterexample on failure
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

// {"tables", "oracle", "counts", "mfun", "affine"}
std::vector<std::string> verify_suite_names();

// Runs the named suite; with threads > 1 the checks run concurrently.
// Unknown suite -> std::domain_error.
SuiteReport run_verify_suite(std::string_view suite, int threads = 1);

}  // namespace residua

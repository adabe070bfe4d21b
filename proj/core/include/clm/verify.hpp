#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clm {

// One verification suite: an end-to-end identity check over the built-in
// grid, with a wall-clock budget where the contract fixes one.
struct SuiteResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;   // key values on success, first failures otherwise
    double seconds = 0.0;
    double budget = 0.0;  // 0 means no per-suite budget
};

// Runs suites 1..11 (or the listed subset), streaming one line per suite.
std::vector<SuiteResult> run_suites(std::ostream& log,
                                    const std::vector<int>& only = {});

bool all_passed(const std::vector<SuiteResult>& results);

} // namespace clm

#pragma once

#include <string>
#include <vector>

namespace bunq {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail; // short summary: case counts, or the first failure
};

/// Runs every invariant suite (deterministic seeds) and reports one result
/// per suite. All suites run even after a failure.
std::vector<SuiteResult> run_selftest();

} // namespace bunq

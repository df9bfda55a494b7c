#pragma once

// Identity suites shared by the CLI and the test drivers. Each record holds
// one identity or one grid cell with its measured discrepancy.

#include <string>
#include <string_view>
#include <vector>

namespace polyexp::checks {

struct CheckRecord {
    std::string suite;
    std::string name;
    bool passed = false;
    /// Mismatch count for exact identities, otherwise the measured error.
    double discrepancy = 0.0;
    double tolerance = 0.0;
};

/// exact, routes, transforms, mellin, series
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Unknown names throw a domain error.
std::vector<CheckRecord> run_suite(std::string_view name);

bool all_passed(const std::vector<CheckRecord>& records);

/// {"suite": ..., "passed": ..., "failures": n, "checks": [...]}
std::string to_json(std::string_view suite, const std::vector<CheckRecord>& records);

}  // namespace polyexp::checks

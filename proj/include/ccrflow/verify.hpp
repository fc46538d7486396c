#pragma once

// Property suites for every module, runnable from the CLI (`verify`) and
// reused by the acceptance tests.  All randomness derives from the single
// seed, so a fixed seed gives byte-identical reports.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ccrflow {

struct CheckResult {
    std::string name;
    bool pass = false;
    double deviation = 0.0; // max observed deviation (or residual)
    double threshold = 0.0;
};

std::vector<CheckResult> verify_star_linalg(std::uint64_t seed);
std::vector<CheckResult> verify_pw(std::uint64_t seed);
std::vector<CheckResult> verify_flow(std::uint64_t seed);
std::vector<CheckResult> verify_gaussian(std::uint64_t seed);
std::vector<CheckResult> verify_fermion(std::uint64_t seed);

std::vector<CheckResult> verify_all(std::uint64_t seed);

// Deterministic pass/fail table; returns true when everything passed.
bool print_report(std::ostream& os, const std::vector<CheckResult>& results);

} // namespace ccrflow

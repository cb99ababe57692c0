#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chowkit {

struct VerifyOptions {
    int seeds_per_prime = 20;
    std::vector<uint32_t> primes = {2, 3, 5};
    uint64_t jacobian_trials = 100;
    int redraw_cap = 8;
    uint64_t budget = 2'000'000;
    std::string tables_path;  // Fano-threefold table
};

struct CheckResult {
    int id = 0;
    std::string label;
    bool pass = false;
    std::vector<std::string> details;
};

// The built-in verification suite: every expected value is pinned in code and
// checked exactly (the finite-field genericity clause reports measured rates).
std::vector<CheckResult> run_paper_checks(const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& checks);

} // namespace chowkit

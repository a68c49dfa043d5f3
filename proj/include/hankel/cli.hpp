#pragma once

#include "hankel/classes.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hankel::cli {

/// Parsed command line. Defaults: tol 1e-6, seed 42, samples 100000,
/// budget 1000000, format text.
struct Command {
    std::string subcommand;
    std::string cls = "r";
    double tol = 1e-6;
    std::uint64_t seed = 42;
    int samples = 100000;
    long budget = 1000000;
    std::string format = "text";
    std::string poly;
    std::string region;
    bool selftest_corrupt = false;
};

/// Exit codes: 0 all checks passed / bound certified; 1 a verification item
/// failed; 2 budget exhausted (outputs still sound); 3 invalid input.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kBudgetExhausted = 2, kUsageError = 3 };

/// Parses argv (program name excluded). Throws CLI::ParseError on bad input.
Command parse_args(const std::vector<std::string>& args);

/// Full driver: parse and execute, streaming results to out and diagnostics
/// to err. Never throws; errors map onto the exit-code contract.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hankel::cli

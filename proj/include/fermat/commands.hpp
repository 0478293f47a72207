#pragma once

#include "fermat/numeric.hpp"
#include "fermat/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fermat::cli {

// Exit codes shared by the library entry points and the binary.
inline constexpr int exit_pass = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_invalid_input = 2;

struct RunConfig {
    std::string command;

    std::optional<int> d;
    std::optional<int> n;
    std::optional<int> p;
    std::optional<int> q;
    std::optional<int> g;
    std::optional<std::pair<int, int>> d_range; // inclusive

    // torsion-order target, as "axis,idx,coeff;axis,idx,coeff;..."
    std::string divisor;

    std::string out;       // output path; empty or "-" means stdout
    std::string cache_dir; // empty disables caching
    long long max_enum = 10'000'000;
    int jobs = 1;
    int verbosity = 0;
};

struct RunResult {
    json report;
    int exit_code = exit_pass;
    bool cache_hit = false;
};

/* Runs one subcommand and assembles its report.  Invalid input and capacity
 * problems surface as exceptions (mapped to exit code 2 by the binary);
 * failed mathematical checks yield a finished report with verdict "fail"
 * and exit code 1.
 */
RunResult run_command(const RunConfig& config);

// Parses "axis,idx,coeff;..." into a cuspidal divisor for the given d.
// Unset positions are zero.  Throws std::invalid_argument on bad syntax.
std::vector<fermat::Int> parse_divisor_spec(const std::string& spec, int d);

} // namespace fermat::cli

// Named verification suites: identity checks and closed-form-vs-oracle sweeps.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dseries/report.hpp"

namespace dseries {

struct VerifyOptions {
    /// Replaces every check's default tolerance.
    std::optional<double> tol;
    /// Replaces the x grid of the trig, zeta and bessel sweeps.
    std::optional<std::vector<double>> grid;
    /// Oracle term budget (default 1e7).
    std::optional<std::uint64_t> max_terms;
    /// 0 means hardware concurrency.
    unsigned threads = 0;
};

struct Check {
    RunRecord record;
    double deviation = 0.0;  // in the check's own metric (absolute or relative)
    double tolerance = 0.0;
    bool passed = false;
};

struct SuiteResult {
    std::vector<Check> checks;
    std::size_t passed = 0;
    double max_rel_diff = 0.0;
};

/// specfun, trig, zeta, bessel, all.
const std::vector<std::string>& suite_names();

/// Runs the suite; checks come back in a fixed order regardless of threading.
/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts = {});

/// start:stop:count, inclusive; count >= 1 (count 1 gives start). Throws std::invalid_argument.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace dseries

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fracgreen {

struct CheckResult {
    std::string name;
    double deviation;
    double tolerance;
    bool passed;
    /// Error text when the check could not be evaluated.
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const noexcept;
    double max_deviation() const noexcept;
};

/// normalization, symmetry, subordination, moments, tails, oracles.
const std::vector<std::string>& suite_names();

/// Runs one named suite; "all" is handled by the caller. The oracles suite
/// is also available in parts, "series-vs-oracle" and "contour". Throws
/// DomainError for an unknown name.
SuiteReport run_suite(std::string_view name);

/// One line per check, then a footer line
/// `summary suite=<name> checks=<n> failed=<m> seconds=<s> status=<pass|fail>`.
void write_report(std::ostream& out, const SuiteReport& report);

}  // namespace fracgreen

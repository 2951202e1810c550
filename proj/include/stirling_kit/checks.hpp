#pragma once

// Identity check suites.  Each suite is a list of rows; a row names an
// identity, the parameter range it was checked over, and the first
// counterexample found.  Reports are deterministic: random inputs come from
// fixed seeds and rows are emitted in a fixed order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stirling_kit {

struct CheckRow {
    std::string identity;
    std::string range;
    bool passed = true;
    std::string counterexample;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckRow> rows;

    bool passed() const;
};

struct CheckOptions {
    /// Main range parameter.  Suites cap it where determinant sizes would
    /// explode (block determinants at 8, the determinant corollary at 6, binomial
    /// invariance at 4).
    int max_n = 12;
    /// Directory holding the golden matrix fixtures used by the "matrices" suite.
    std::string fixture_dir;
};

/// Directory compiled in at build time, overridden by STIRLING_KIT_FIXTURES.
std::string default_fixture_dir();

/// ega, egf, hankel, rstirling, catalan-motzkin, bernoulli, matrices.
const std::vector<std::string>& suite_names();

/// Runs one suite; std::invalid_argument for unknown names.
CheckReport run_suite(std::string_view name, const CheckOptions& options);

/// "all" or a single suite name.  Suites run concurrently; the result is in
/// suite_names() order.
std::vector<CheckReport> run_checks(std::string_view selection, const CheckOptions& options);

bool all_passed(const std::vector<CheckReport>& reports);

/// One line per row, then an overall line.
std::string render_report_text(const std::vector<CheckReport>& reports);
std::string render_report_json(const std::vector<CheckReport>& reports);

/// Golden fixture file names, in the order the matrices suite checks them.
const std::vector<std::string>& matrix_fixture_names();
/// Regenerates the block a fixture describes, rendered as JSON.
std::string regenerate_matrix_fixture(std::string_view fixture_name);

}  // namespace stirling_kit

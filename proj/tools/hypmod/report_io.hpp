#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hypmod/numeric.hpp"

namespace hypmod::cli {

/// Fixed 9-significant-digit rendering used by every numeric field in JSON
/// and CSV output, so identical invocations serialize byte-identically.
std::string g9(double v);

std::string json_escape(const std::string& s);

/// One named pass/fail check of the verify suite.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Everything the `verify` command computed.
struct VerifySuiteResult {
    std::string suite;
    unsigned seed = 0;
    int grid_n = 0;
    double tol = 0.0;
    std::vector<ModulusReport> reports;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

/// Single report object with the fixed keys: family, parameters,
/// closed_form, density_energy, admissibility_min, admissibility_argmin,
/// discrete_lower_bound, oracle_value, warnings, seed.
void write_report_json(std::ostream& out, const ModulusReport& report,
                       unsigned seed, int indent = 0);

/// Header `parameter,integral` plus one row per audited curve.
void write_report_csv(std::ostream& out, const ModulusReport& report);

void write_suite_json(std::ostream& out, const VerifySuiteResult& suite);

/// Header `family,parameter,integral` with the audit rows of every report.
void write_suite_csv(std::ostream& out, const VerifySuiteResult& suite);

} // namespace hypmod::cli

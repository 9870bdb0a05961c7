#pragma once

#include "report_io.hpp"

namespace hypmod::cli {

/// Runs the requested verification bundle ("all", "quad" or "annulus"):
/// full reports at the reference parameters plus seeded invariance and
/// identity checks. Deterministic for a fixed seed.
VerifySuiteResult run_verify_suite(const std::string& suite, unsigned seed,
                                   int grid_n, double tol);

} // namespace hypmod::cli

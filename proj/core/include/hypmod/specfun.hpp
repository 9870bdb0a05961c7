#pragma once

#include "hypmod/errors.hpp"

namespace hypmod {

/// Value plus a rigorous absolute error bound; est_abs_error stays below
/// 1e-12 for every in-range argument.
struct SpecFunResult {
    double value;
    double est_abs_error;
};

/// Inverse tangent integral Ti2(x) = integral_0^x arctan(t)/t dt, x >= 0.
///
/// For x <= 1 the alternating series sum_k (-1)^k x^(2k+1) / (2k+1)^2 is
/// summed with compensation until the first omitted term (which bounds the
/// remainder) drops below 2.5e-13. For x > 1 the inversion identity
/// Ti2(x) = Ti2(1/x) + (pi/2) log x reduces to the series range.
/// Throws NegativeArgument for x < 0.
SpecFunResult ti2(double x);

/// Catalan's constant G = Ti2(1), as a fixed constant.
double catalan();

} // namespace hypmod

#pragma once

#include "hypmod/hyp_core.hpp"

namespace hypmod {

/// Hyperbolic polar coordinates about the base point (1,0): r is the
/// hyperbolic distance to the base point, theta in [0, 2*pi) the angle of the
/// geodesic ray. r = 0 is canonicalized with theta = 0.
struct PolarPoint {
    double r;
    double theta;

    PolarPoint(double r_, double theta_);
};

/// (r, theta) -> (lambda, t) with
///   lambda = 1 / (cosh r - cos theta sinh r),
///   t      = sin theta sinh r * lambda.
/// The denominator is >= exp(-r) > 0, so the image always lies in the
/// half-plane.
HPoint to_cartesian(const PolarPoint& p);

/// Inverse of to_cartesian. r = acosh((lambda^2 + t^2 + 1) / (2 lambda));
/// theta is resolved over [0, 2*pi) through the two-argument arctangent of
/// (2t, lambda^2 + t^2 - 1), whose components carry exactly the signs of
/// (sin theta, cos theta). Points within 1e-14 of the base point collapse to
/// (0, 0).
PolarPoint from_cartesian(const HPoint& p);

/// Jacobian determinant of to_cartesian: lambda(r,theta)^2 * sinh r.
double polar_jacobian(const PolarPoint& p);

/// The isometry z -> lambda0 z + i t0 taking the base point (1,0) to
/// `center`. Conjugating by it re-bases polar coordinates anywhere.
MobiusIsometry centering_isometry(const HPoint& center);

/// Polar coordinates about an arbitrary center, via conjugation with
/// centering_isometry.
PolarPoint to_polar_about(const HPoint& center, const HPoint& p);
HPoint from_polar_about(const HPoint& center, const PolarPoint& p);

} // namespace hypmod

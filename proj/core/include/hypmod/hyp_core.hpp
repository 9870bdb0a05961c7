#pragma once

#include <complex>

#include "hypmod/errors.hpp"

namespace hypmod {

/// Point of the half-plane model: z = lambda + i*t with lambda > 0, carrying
/// the metric (d lambda^2 + dt^2) / lambda^2.
struct HPoint {
    double lambda;
    double t;

    HPoint(double lambda_, double t_) : lambda(lambda_), t(t_) {
        if (!(lambda > 0.0))
            throw BadParameters("HPoint requires lambda > 0");
    }

    std::complex<double> as_complex() const { return {lambda, t}; }
};

/// Hyperbolic distance, cosh d = 1 + |z1 - z2|^2 / (2 lambda1 lambda2).
/// Arguments within 1e-14 of the acosh branch point are treated as equal.
double dist(const HPoint& p, const HPoint& q);

/// Orientation-preserving isometry z -> (a z + i b) / (i c z + d) with real
/// coefficients and a d + b c = 1. The constructor accepts any quadruple with
/// a d + b c > 0 and rescales it onto the normalized slice.
struct MobiusIsometry {
    double a, b, c, d;

    MobiusIsometry(double a_, double b_, double c_, double d_);

    static MobiusIsometry identity() { return {1.0, 0.0, 0.0, 1.0}; }

    /// Rotation about the base point (1,0) by angle theta; used to sweep
    /// geodesic rays into polar coordinates.
    static MobiusIsometry rotation_about_base(double theta);

    MobiusIsometry inverse() const { return {d, -b, -c, a}; }

    HPoint apply(const HPoint& p) const;
};

/// Composition: (f * g)(z) = f(g(z)). Result is renormalized.
MobiusIsometry operator*(const MobiusIsometry& f, const MobiusIsometry& g);

/// A point of the closed half-plane (lambda >= 0) extended with a single
/// point at infinity, as accepted by cross_ratio. Interior points convert
/// implicitly from HPoint.
struct ExtPoint {
    std::complex<double> z{0.0, 0.0};
    bool infinite = false;

    ExtPoint(std::complex<double> value) : z(value) {}
    ExtPoint(double re, double im) : z(re, im) {}
    ExtPoint(const HPoint& p) : z(p.lambda, p.t) {}

    static ExtPoint infinity() {
        ExtPoint p{0.0, 0.0};
        p.infinite = true;
        return p;
    }
};

/// Cross-ratio [z1,z2,z3,z4] = (z4-z2)(z3-z1) / ((z4-z1)(z3-z2)).
/// An infinite argument participates through the usual limit (the two factors
/// containing it cancel). Throws DuplicatePoints if any two inputs coincide.
std::complex<double> cross_ratio(const ExtPoint& z1, const ExtPoint& z2,
                                 const ExtPoint& z3, const ExtPoint& z4);

/// Circle of hyperbolic center/radius.
struct HyperbolicCircle {
    HPoint center;
    double radius;

    HyperbolicCircle(HPoint center_, double radius_)
        : center(center_), radius(radius_) {
        if (!(radius > 0.0))
            throw BadParameters("HyperbolicCircle requires radius > 0");
    }
};

/// Circle in the Euclidean sense; center (x, t) may sit anywhere.
struct EuclideanCircle {
    double x;
    double t;
    double radius;

    EuclideanCircle(double x_, double t_, double radius_)
        : x(x_), t(t_), radius(radius_) {
        if (!(radius > 0.0))
            throw BadParameters("EuclideanCircle requires radius > 0");
    }
};

/// A hyperbolic circle around (lambda0, t0) of radius R is the Euclidean
/// circle with center (lambda0 cosh R, t0) and radius lambda0 sinh R.
EuclideanCircle to_euclidean(const HyperbolicCircle& c);

} // namespace hypmod

// Test-side oracles, kept independent of the library's integration and
// branch-resolution code paths:
//   * an adaptive Gauss-Legendre integrator (fixed 8-point rule with
//     hard-coded nodes, tolerance-driven bisection),
//   * the eight-row branch table for the polar angle,
//   * a seeded Monte-Carlo area estimator,
//   * finite-difference Jacobian / metric-pullback helpers,
//   * seeded random points and isometries.
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hypmod/hyp_core.hpp"
#include "hypmod/polar.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// Adaptive quadrature: 8-point Gauss-Legendre panels, bisected until the
// two-half refinement of a panel agrees with the whole panel.

inline constexpr std::array<double, 8> kGlNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
inline constexpr std::array<double, 8> kGlWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

template <typename F>
double gl8_panel(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < 8; ++i)
        s += kGlWeights[i] * f(mid + half * kGlNodes[i]);
    return s * half;
}

template <typename F>
double adaptive_rec(F&& f, double a, double b, double whole, double tol, int depth) {
    if (depth > 60)
        throw std::runtime_error("adaptive quadrature recursion limit");
    const double mid = 0.5 * (a + b);
    const double left = gl8_panel(f, a, mid);
    const double right = gl8_panel(f, mid, b);
    if (std::abs(left + right - whole) <= tol)
        return left + right;
    return adaptive_rec(f, a, mid, left, 0.5 * tol, depth + 1) +
           adaptive_rec(f, mid, b, right, 0.5 * tol, depth + 1);
}

template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-13) {
    if (a == b)
        return 0.0;
    return adaptive_rec(f, a, b, gl8_panel(f, a, b), tol, 0);
}

/// Ti2 integrand with the removable singularity filled in.
inline double ti2_integrand(double t) {
    return t == 0.0 ? 1.0 : std::atan(t) / t;
}

inline double ti2_quadrature(double x, double tol = 1e-13) {
    return integrate(ti2_integrand, 0.0, x, tol);
}

// ---------------------------------------------------------------------------
// Eight-row branch table resolving the polar angle over [0, 2*pi). Rows with
// a negative tangent quotient are phrased through the positive reference
// angle.

inline double theta_table(double lambda, double t) {
    const double q = lambda * lambda + t * t - 1.0;
    if (t == 0.0 && lambda >= 1.0)
        return 0.0;
    if (q > 0.0 && t > 0.0)
        return std::atan(2.0 * t / q);
    if (q == 0.0 && t > 0.0)
        return std::numbers::pi / 2.0;
    if (q < 0.0 && t > 0.0)
        return std::numbers::pi - std::atan(2.0 * t / -q);
    if (t == 0.0 && lambda < 1.0)
        return std::numbers::pi;
    if (q < 0.0 && t < 0.0)
        return std::numbers::pi + std::atan(2.0 * t / q);
    if (q == 0.0 && t < 0.0)
        return 3.0 * std::numbers::pi / 2.0;
    return 2.0 * std::numbers::pi - std::atan(-2.0 * t / q);
}

// ---------------------------------------------------------------------------
// Monte-Carlo area of the quad region, sampled in its bounding box.

struct McArea {
    double estimate;
    double std_error;
};

inline McArea mc_quad_area(double a, double b, long n_samples, unsigned seed) {
    std::mt19937 gen(seed);
    const double box_lo = 1.0;
    const double box_hi = std::sqrt(a * a + b * b);
    std::uniform_real_distribution<double> ul(box_lo, box_hi);
    std::uniform_real_distribution<double> ut(-b, b);
    const double rr_lo = 1.0 + b * b;
    const double rr_hi = a * a + b * b;
    long hits = 0;
    for (long i = 0; i < n_samples; ++i) {
        const double l = ul(gen);
        const double t = ut(gen);
        const double rr = l * l + t * t;
        if (rr >= rr_lo && rr <= rr_hi)
            ++hits;
    }
    const double box = (box_hi - box_lo) * 2.0 * b;
    const double p = static_cast<double>(hits) / static_cast<double>(n_samples);
    return {p * box, box * std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples))};
}

// ---------------------------------------------------------------------------
// Finite differences of the polar chart.

struct Jet2 {
    // d(lambda, t)/d(r, theta)
    double dl_dr, dl_dth, dt_dr, dt_dth;
};

inline Jet2 fd_polar_jet(double r, double theta, double h = 1e-5) {
    using hypmod::HPoint;
    using hypmod::PolarPoint;
    const HPoint pr1 = to_cartesian(PolarPoint(r + h, theta));
    const HPoint pr0 = to_cartesian(PolarPoint(r - h, theta));
    const HPoint pt1 = to_cartesian(PolarPoint(r, theta + h));
    const HPoint pt0 = to_cartesian(PolarPoint(r, theta - h));
    return {(pr1.lambda - pr0.lambda) / (2.0 * h),
            (pt1.lambda - pt0.lambda) / (2.0 * h),
            (pr1.t - pr0.t) / (2.0 * h),
            (pt1.t - pt0.t) / (2.0 * h)};
}

inline double fd_polar_jacobian(double r, double theta, double h = 1e-5) {
    const Jet2 j = fd_polar_jet(r, theta, h);
    return std::abs(j.dl_dr * j.dt_dth - j.dl_dth * j.dt_dr);
}

struct Metric2 {
    double g_rr, g_rth, g_thth;
};

/// Pullback of (d lambda^2 + dt^2)/lambda^2 under the polar chart.
inline Metric2 fd_metric_pullback(double r, double theta, double h = 1e-5) {
    const Jet2 j = fd_polar_jet(r, theta, h);
    const double lambda = to_cartesian(hypmod::PolarPoint(r, theta)).lambda;
    const double il2 = 1.0 / (lambda * lambda);
    return {(j.dl_dr * j.dl_dr + j.dt_dr * j.dt_dr) * il2,
            (j.dl_dr * j.dl_dth + j.dt_dr * j.dt_dth) * il2,
            (j.dl_dth * j.dl_dth + j.dt_dth * j.dt_dth) * il2};
}

// ---------------------------------------------------------------------------
// Seeded random geometry.

class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

    hypmod::HPoint point(double lambda_lo = 0.05, double lambda_hi = 8.0,
                         double t_span = 8.0) {
        return {uniform(lambda_lo, lambda_hi), uniform(-t_span, t_span)};
    }

    hypmod::MobiusIsometry isometry() {
        for (;;) {
            const double a = uniform(-2.0, 2.0);
            const double b = uniform(-2.0, 2.0);
            const double c = uniform(-2.0, 2.0);
            const double d = uniform(-2.0, 2.0);
            if (a * d + b * c > 0.1)
                return {a, b, c, d};
        }
    }

    std::mt19937& gen() { return gen_; }

private:
    std::mt19937 gen_;
};

} // namespace oracle

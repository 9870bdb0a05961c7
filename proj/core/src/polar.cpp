#include "hypmod/polar.hpp"

#include <cmath>
#include <numbers>

namespace hypmod {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PolarPoint::PolarPoint(double r_, double theta_) : r(r_), theta(theta_) {
    if (!(r >= 0.0))
        throw BadParameters("PolarPoint requires r >= 0");
    if (r == 0.0) {
        theta = 0.0;
        return;
    }
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0)
        theta += kTwoPi;
    if (theta >= kTwoPi)
        theta = 0.0;
}

HPoint to_cartesian(const PolarPoint& p) {
    const double den = std::cosh(p.r) - std::cos(p.theta) * std::sinh(p.r);
    const double lambda = 1.0 / den;
    return {lambda, std::sin(p.theta) * std::sinh(p.r) * lambda};
}

PolarPoint from_cartesian(const HPoint& p) {
    const double ss = p.lambda * p.lambda + p.t * p.t;
    if (std::abs(ss - 1.0) < 1e-14 && std::abs(p.t) < 1e-14)
        return {0.0, 0.0};
    const double ch = (ss + 1.0) / (2.0 * p.lambda);
    const double r = ch <= 1.0 ? 0.0 : std::acosh(ch);
    if (r == 0.0)
        return {0.0, 0.0};
    double theta = std::atan2(2.0 * p.t, ss - 1.0);
    if (theta < 0.0)
        theta += kTwoPi;
    if (theta >= kTwoPi)
        theta = 0.0;
    return {r, theta};
}

double polar_jacobian(const PolarPoint& p) {
    const double lambda = to_cartesian(p).lambda;
    return lambda * lambda * std::sinh(p.r);
}

MobiusIsometry centering_isometry(const HPoint& center) {
    const double s = std::sqrt(center.lambda);
    return {s, center.t / s, 0.0, 1.0 / s};
}

PolarPoint to_polar_about(const HPoint& center, const HPoint& p) {
    return from_cartesian(centering_isometry(center).inverse().apply(p));
}

HPoint from_polar_about(const HPoint& center, const PolarPoint& p) {
    return centering_isometry(center).apply(to_cartesian(p));
}

} // namespace hypmod

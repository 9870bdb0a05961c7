#include "hypmod/hyp_core.hpp"

#include <cmath>

namespace hypmod {

double dist(const HPoint& p, const HPoint& q) {
    const double dl = p.lambda - q.lambda;
    const double dt = p.t - q.t;
    const double u = 1.0 + (dl * dl + dt * dt) / (2.0 * p.lambda * q.lambda);
    if (u - 1.0 < 1e-14)
        return 0.0;
    return std::acosh(u);
}

MobiusIsometry::MobiusIsometry(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    const double det = a * d + b * c;
    if (!(det > 0.0))
        throw BadParameters("MobiusIsometry requires a*d + b*c > 0");
    const double s = std::sqrt(det);
    a /= s;
    b /= s;
    c /= s;
    d /= s;
}

MobiusIsometry MobiusIsometry::rotation_about_base(double theta) {
    const double co = std::cos(theta / 2.0);
    const double si = std::sin(theta / 2.0);
    return {co, -si, -si, co};
}

HPoint MobiusIsometry::apply(const HPoint& p) const {
    // f(z) = (a z + i b)(-i c conj(z) + d) / |i c z + d|^2 expanded in real
    // arithmetic. The real part comes out as lambda * (a d + b c) / |den|^2,
    // so positivity is structural rather than a rounding accident.
    const double den = (d - c * p.t) * (d - c * p.t) + (c * p.lambda) * (c * p.lambda);
    const double zz = p.lambda * p.lambda + p.t * p.t;
    const double lambda = p.lambda * (a * d + b * c) / den;
    const double t = (-a * c * zz + (a * d - b * c) * p.t + b * d) / den;
    return {lambda, t};
}

MobiusIsometry operator*(const MobiusIsometry& f, const MobiusIsometry& g) {
    return {f.a * g.a - f.b * g.c, f.a * g.b + f.b * g.d,
            f.c * g.a + f.d * g.c, f.d * g.d - f.c * g.b};
}

std::complex<double> cross_ratio(const ExtPoint& z1, const ExtPoint& z2,
                                 const ExtPoint& z3, const ExtPoint& z4) {
    const ExtPoint* pts[4] = {&z1, &z2, &z3, &z4};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const bool same_inf = pts[i]->infinite && pts[j]->infinite;
            const bool same_fin = !pts[i]->infinite && !pts[j]->infinite &&
                                  pts[i]->z == pts[j]->z;
            if (same_inf || same_fin)
                throw DuplicatePoints("cross_ratio requires pairwise distinct points");
        }
    }
    if (z1.infinite)
        return (z4.z - z2.z) / (z3.z - z2.z);
    if (z2.infinite)
        return (z3.z - z1.z) / (z4.z - z1.z);
    if (z3.infinite)
        return (z4.z - z2.z) / (z4.z - z1.z);
    if (z4.infinite)
        return (z3.z - z1.z) / (z3.z - z2.z);
    return (z4.z - z2.z) * (z3.z - z1.z) / ((z4.z - z1.z) * (z3.z - z2.z));
}

EuclideanCircle to_euclidean(const HyperbolicCircle& c) {
    return {c.center.lambda * std::cosh(c.radius), c.center.t,
            c.center.lambda * std::sinh(c.radius)};
}

} // namespace hypmod

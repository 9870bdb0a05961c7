#include "hypmod/closed_form.hpp"

#include <cmath>
#include <numbers>

namespace hypmod {

namespace {

constexpr double kPi = std::numbers::pi;

void require_nondegenerate_quad(double a) {
    if (!(a > 1.0))
        throw DegenerateQuad("quad moduli need a > 1");
}

void require_annulus_radii(double r1, double r2) {
    if (!(r1 > 0.0) || !(r1 < r2))
        throw DegenerateAnnulus("annulus moduli need 0 < r1 < r2");
}

double log_tanh_ratio(double r1, double r2) {
    return std::log(std::tanh(r2 / 2.0) / std::tanh(r1 / 2.0));
}

double segment_integral_denominator(double a) {
    const double i1 = quad_area_euclidean(a, 1.0);
    const double i2 =
        2.0 * (catalan() + kPi / 2.0 * std::log(a) - ti2(a).value);
    return i1 + i2;
}

} // namespace

ModulusValue mod_quad_arcs(double a) {
    require_nondegenerate_quad(a);
    return {4.0 / quad_area_euclidean(a, 1.0), FamilyKind::quad_arcs};
}

ModulusValue mod_quad_segments(double a) {
    require_nondegenerate_quad(a);
    return {(a - 1.0) * (a - 1.0) / segment_integral_denominator(a),
            FamilyKind::quad_segments};
}

ModulusValue mod_annulus_joining(double r1, double r2) {
    require_annulus_radii(r1, r2);
    return {2.0 * kPi / log_tanh_ratio(r1, r2), FamilyKind::annulus_joining};
}

ModulusValue mod_annulus_separating(double r1, double r2) {
    require_annulus_radii(r1, r2);
    return {log_tanh_ratio(r1, r2) / (2.0 * kPi),
            FamilyKind::annulus_separating};
}

DensityField extremal_density(FamilyKind kind, double a) {
    if (!is_quad_family(kind))
        throw BadParameters("quad overload of extremal_density needs a quad family");
    require_nondegenerate_quad(a);
    const NormalQuad quad(a);

    if (kind == FamilyKind::quad_arcs) {
        const double area = quad_area_euclidean(a, 1.0);
        return {kind, quad, [quad, area](const HPoint& p) {
                    return contains(quad, p) ? 2.0 * p.lambda / area : 0.0;
                }};
    }

    const double scale = (a - 1.0) / segment_integral_denominator(a);
    return {kind, quad, [quad, scale](const HPoint& p) {
                if (!contains(quad, p))
                    return 0.0;
                // (l^2+1) cos(s)/l at the point: |z|^2 = l^2 + 1 and
                // cos s = lambda/|z|, so the value is lambda |z| / sqrt(|z|^2-1).
                const double zz = p.lambda * p.lambda + p.t * p.t;
                return scale * p.lambda * std::sqrt(zz) / std::sqrt(zz - 1.0);
            }};
}

DensityField extremal_density(FamilyKind kind, const Annulus& annulus) {
    if (is_quad_family(kind))
        throw BadParameters("annulus overload of extremal_density needs an annulus family");

    const double c = kind == FamilyKind::annulus_joining
                         ? 1.0 / log_tanh_ratio(annulus.r_inner, annulus.r_outer)
                         : 1.0 / (2.0 * kPi);
    // same membership slack as contains(), with the distance computed once
    return {kind, annulus, [annulus, c](const HPoint& p) {
                const double r = dist(p, annulus.center);
                if (r < annulus.r_inner - 1e-12 || r > annulus.r_outer + 1e-12)
                    return 0.0;
                return c / std::sinh(r);
            }};
}

} // namespace hypmod

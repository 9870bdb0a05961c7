#pragma once

#include <functional>
#include <variant>

#include "hypmod/domains.hpp"
#include "hypmod/specfun.hpp"

namespace hypmod {

/// Value of one of the four closed-form modulus expressions, tagged with the
/// family it belongs to.
struct ModulusValue {
    double value;
    FamilyKind formula_id;
};

/// Modulus of the family joining the circular boundary arcs of Q(a,1):
/// 4 / area(Q(a,1)). Throws DegenerateQuad for a <= 1.
ModulusValue mod_quad_arcs(double a);

/// Modulus of the family joining the horizontal boundary segments of Q(a,1):
/// (a-1)^2 / I with I = area(Q(a,1)) + 2 (G + (pi/2) log a - Ti2(a)).
/// Throws DegenerateQuad for a <= 1.
ModulusValue mod_quad_segments(double a);

/// Modulus of the family joining the boundary circles of an annulus with
/// radii 0 < r1 < r2: 2 pi / log(tanh(r2/2) / tanh(r1/2)).
/// Throws DegenerateAnnulus unless 0 < r1 < r2.
ModulusValue mod_annulus_joining(double r1, double r2);

/// Modulus of the family of closed curves separating the boundary circles:
/// log(tanh(r2/2) / tanh(r1/2)) / (2 pi). Exact reciprocal of the joining
/// modulus. Throws DegenerateAnnulus unless 0 < r1 < r2.
ModulusValue mod_annulus_separating(double r1, double r2);

/// Nonnegative pointwise density with support restricted to its domain
/// (value 0 outside); the object the modulus variational problem ranges over.
struct DensityField {
    FamilyKind kind;
    std::variant<NormalQuad, Annulus> domain;
    std::function<double(const HPoint&)> value;

    double operator()(const HPoint& p) const { return value(p); }

    const NormalQuad* quad() const { return std::get_if<NormalQuad>(&domain); }
    const Annulus* annulus() const { return std::get_if<Annulus>(&domain); }
};

/// The candidate extremal density of each family, supported on its domain:
///   quad_arcs:          rho(lambda, t) = 2 lambda / area(Q(a,1))
///   quad_segments:      rho = ((a-1)/I) (l^2+1) cos(s) / l in the arc
///                       parametrization l = sqrt(|z|^2 - 1), cos s =
///                       lambda/|z| (the Cauchy-Schwarz equality density,
///                       whose energy is exactly (a-1)^2 / I)
///   annulus_joining:    rho = c0 / sinh(r), c0 = 1/log(tanh(r2/2)/tanh(r1/2))
///   annulus_separating: rho = 1 / (2 pi sinh(r))
/// with r the hyperbolic distance to the annulus center. No admissibility
/// claim is made here; admissibility_audit measures that separately.
DensityField extremal_density(FamilyKind kind, double a);
DensityField extremal_density(FamilyKind kind, const Annulus& annulus);

} // namespace hypmod

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypmod/closed_form.hpp"
#include "hypmod/quadrature.hpp"

namespace hypmod {

/// Result of integrating a density along every curve of a sampled subfamily.
/// A minimum below 1 falsifies admissibility of the density for the full
/// family the subfamily belongs to.
struct AuditReport {
    double min_integral = 0.0;
    double argmin_parameter = 0.0;
    int n_curves = 0;
    std::vector<double> per_curve_parameters;
    std::vector<double> per_curve_integrals;
};

/// Aggregate of every check run for one family: closed form, 2d-quadrature
/// energy of the candidate extremal density, subfamily admissibility audit,
/// the discrete foliated lower bound, and (for the annulus joining family)
/// the Euclidean ring modulus of the boundary circles.
struct ModulusReport {
    FamilyKind family = FamilyKind::quad_arcs;
    std::map<std::string, double> parameters;
    double closed_form = 0.0;
    double density_energy = 0.0;
    AuditReport admissibility;
    double discrete_lower_bound = 0.0;
    std::optional<double> oracle_value;
    std::vector<std::string> warnings;
};

/// Line integral of rho along gamma with respect to hyperbolic arclength.
/// Uses the curve's exact hyperbolic speed when present; otherwise tangents
/// come from central differences at step (u1-u0)*1e-6 (the evaluator must
/// tolerate that much extrapolation beyond the ends).
double curve_integral(const DensityField& rho, const Curve& gamma,
                      const QuadratureSpec& spec = {});

/// Energy of a density: the integral of rho^2 over its support with respect
/// to hyperbolic area, computed in the domain's natural parametrization
/// (Cartesian chart for quad_arcs, the arc-angle chart for quad_segments,
/// recentered polar coordinates for the annuli).
double energy(const DensityField& rho, const QuadratureSpec& spec = {});

/// Chart selection for quad densities, so the same energy can be computed
/// along two independent routes.
enum class QuadChart {
    cartesian, // (lambda, t), dA_h = d lambda dt / lambda^2
    arc_angle, // (l, s), point sqrt(1+l^2)(cos s, sin s),
               // dA_h = l dl ds / ((l^2+1) cos^2 s)
};

double energy(const DensityField& rho, QuadChart chart,
              const QuadratureSpec& spec = {});

/// Integrates rho along each of n_curves subfamily curves of rho's own
/// family and domain, and reports the minimum. Requires n_curves >= 3.
AuditReport admissibility_audit(const DensityField& rho, int n_curves,
                                const QuadratureSpec& spec = {});

/// Discrete modulus of the n-curve sampled subfamily. The subfamily foliates
/// its domain, so the constrained minimization decouples leaf by leaf: in
/// adapted coordinates (p, u) with area weight w and leaf speed v, the
/// cheapest density tight on the leaf at p has energy 1/K(p),
/// K(p) = integral of v^2/w along the leaf. The n curves cut the transverse
/// range into strips, and the returned value is the lower Darboux sum
/// sum_i width_i * min(1/K at strip edges) -- monotone nondecreasing under
/// strip refinement by construction (the per-kind 1/K profiles attain strip
/// minima at edges), and converging to the transverse integral of 1/K.
/// Throws EmptyFamily for n_curves = 0 and BadParameters below 8.
double foliated_modulus(FamilyKind kind, double a, int n_curves,
                        const QuadratureSpec& spec = {});
double foliated_modulus(FamilyKind kind, const Annulus& annulus, int n_curves,
                        const QuadratureSpec& spec = {});

/// Modulus of the family joining two nested Euclidean circles, via the
/// Moebius transformation sending the limit points of their coaxial pencil
/// to 0 and infinity (which makes the circles concentric). For circles
/// bounding a hyperbolic annulus this must agree with mod_annulus_joining:
/// the hyperbolic metric is conformal to the Euclidean one on the
/// half-plane, and the modulus is a conformal invariant.
/// Throws NotNested unless `inner` lies strictly inside `outer`.
double euclidean_ring_modulus(const EuclideanCircle& inner,
                              const EuclideanCircle& outer);

/// Runs every check for one family and assembles the report: admissibility
/// audit over 201 curves, foliated bound over 512, the ring-modulus oracle
/// for annulus_joining. Warnings flag an admissibility minimum below
/// 1 - 1e-6 and an |energy - closed_form| above 1e-4.
ModulusReport verify_report(FamilyKind kind, double a,
                            const QuadratureSpec& spec = {});
ModulusReport verify_report(FamilyKind kind, const Annulus& annulus,
                            const QuadratureSpec& spec = {});

} // namespace hypmod

#include "hypmod/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace hypmod {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kDefaultAuditCurves = 201;
constexpr int kDefaultFoliationCurves = 512;
constexpr double kAdmissibilitySlack = 1e-6;
constexpr double kEnergyMatchTol = 1e-4;

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

const NormalQuad& require_unit_quad(const DensityField& rho) {
    const NormalQuad* q = rho.quad();
    if (!q)
        throw BadParameters("quad chart energy needs a quad-supported density");
    if (q->b != 1.0)
        throw BadParameters("quad families are defined on Q(a,1)");
    return *q;
}

} // namespace

double curve_integral(const DensityField& rho, const Curve& gamma,
                      const QuadratureSpec& spec) {
    const double u0 = gamma.u0();
    const double u1 = gamma.u1();
    if (gamma.hyp_speed()) {
        const auto& speed = gamma.hyp_speed();
        return integrate(
            [&](double u) { return rho(gamma.at(u)) * speed(u); }, u0, u1, spec);
    }
    const double h = (u1 - u0) * 1e-6;
    return integrate(
        [&](double u) {
            const HPoint pm = gamma.at(u - h);
            const HPoint pp = gamma.at(u + h);
            const HPoint pc = gamma.at(u);
            const double speed =
                std::hypot(pp.lambda - pm.lambda, pp.t - pm.t) / (2.0 * h) /
                pc.lambda;
            return rho(pc) * speed;
        },
        u0, u1, spec);
}

double energy(const DensityField& rho, const QuadratureSpec& spec) {
    if (const Annulus* ann = rho.annulus()) {
        const HPoint center = ann->center;
        return integrate_2d(
            [&](double r, double theta) {
                const double v = rho(from_polar_about(center, PolarPoint(r, theta)));
                return v * v * std::sinh(r);
            },
            ann->r_inner, ann->r_outer, [](double) { return 0.0; },
            [](double) { return 2.0 * kPi; }, spec);
    }
    return energy(rho,
                  rho.kind == FamilyKind::quad_arcs ? QuadChart::cartesian
                                                    : QuadChart::arc_angle,
                  spec);
}

double energy(const DensityField& rho, QuadChart chart,
              const QuadratureSpec& spec) {
    const NormalQuad& q = require_unit_quad(rho);
    const double a = q.a;
    if (chart == QuadChart::cartesian) {
        return integrate_2d(
            [&](double t, double lambda) {
                const double v = rho(HPoint(lambda, t));
                return v * v / (lambda * lambda);
            },
            -1.0, 1.0, [](double t) { return std::sqrt(2.0 - t * t); },
            [a](double t) { return std::sqrt(a * a + 1.0 - t * t); }, spec);
    }
    return integrate_2d(
        [&](double l, double s) {
            const double radius = std::sqrt(1.0 + l * l);
            const double v = rho(HPoint(radius * std::cos(s), radius * std::sin(s)));
            const double cs = std::cos(s);
            return v * v * l / ((l * l + 1.0) * cs * cs);
        },
        1.0, a, [](double l) { return -std::atan(1.0 / l); },
        [](double l) { return std::atan(1.0 / l); }, spec);
}

AuditReport admissibility_audit(const DensityField& rho, int n_curves,
                                const QuadratureSpec& spec) {
    if (n_curves < 3)
        throw BadParameters("admissibility_audit needs n_curves >= 3");
    const std::vector<Curve> curves =
        rho.quad() ? sample_subfamily(rho.kind, rho.quad()->a, n_curves)
                   : sample_subfamily(rho.kind, *rho.annulus(), n_curves);

    AuditReport report;
    report.n_curves = n_curves;
    report.per_curve_parameters.reserve(curves.size());
    report.per_curve_integrals.reserve(curves.size());
    bool first = true;
    for (const Curve& gamma : curves) {
        const double value = curve_integral(rho, gamma, spec);
        report.per_curve_parameters.push_back(gamma.family_parameter());
        report.per_curve_integrals.push_back(value);
        if (first || value < report.min_integral) {
            report.min_integral = value;
            report.argmin_parameter = gamma.family_parameter();
            first = false;
        }
    }
    return report;
}

namespace {

// Lower Darboux sum of 1/K over the strips cut by the grid edges. The
// per-kind profiles of 1/K are monotone or centrally unimodal, so the strip
// minimum always sits at an edge.
double lower_strip_sum(const std::vector<double>& grid,
                       const std::vector<double>& inv_cost) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        sum += (grid[i + 1] - grid[i]) * std::min(inv_cost[i], inv_cost[i + 1]);
    return sum;
}

void check_foliation_count(int n_curves) {
    if (n_curves == 0)
        throw EmptyFamily("foliated_modulus needs curves to constrain");
    if (n_curves < 8)
        throw BadParameters("foliated_modulus needs n_curves >= 8");
}

} // namespace

double foliated_modulus(FamilyKind kind, double a, int n_curves,
                        const QuadratureSpec& spec) {
    if (!is_quad_family(kind))
        throw BadParameters("quad overload of foliated_modulus needs a quad family");
    check_foliation_count(n_curves);
    const NormalQuad quad(a);
    if (quad.degenerate())
        throw DegenerateDomain("Q(1,1) has zero width");

    std::vector<double> grid;
    std::vector<double> inv_cost;
    inv_cost.reserve(n_curves);
    if (kind == FamilyKind::quad_arcs) {
        // leaf gamma_t: v = 1/lambda, w = 1/lambda^2, v^2/w = 1
        grid = detail::closed_grid(-1.0, 1.0, n_curves, 0.0);
        for (double t : grid) {
            const double l1 = std::sqrt(2.0 - t * t);
            const double l2 = std::sqrt(a * a + 1.0 - t * t);
            inv_cost.push_back(
                1.0 / integrate([](double) { return 1.0; }, l1, l2, spec));
        }
    } else {
        // leaf gamma_l: v = 1/cos s, w = l/((l^2+1) cos^2 s), v^2/w = (l^2+1)/l
        grid = detail::closed_grid(1.0, a, n_curves, 1.0);
        for (double l : grid) {
            const double s_l = std::atan(1.0 / l);
            const double k = integrate(
                [l](double) { return (l * l + 1.0) / l; }, -s_l, s_l, spec);
            inv_cost.push_back(1.0 / k);
        }
    }
    return lower_strip_sum(grid, inv_cost);
}

double foliated_modulus(FamilyKind kind, const Annulus& annulus, int n_curves,
                        const QuadratureSpec& spec) {
    if (is_quad_family(kind))
        throw BadParameters("annulus overload of foliated_modulus needs an annulus family");
    check_foliation_count(n_curves);

    if (kind == FamilyKind::annulus_joining) {
        // leaf gamma_theta: v = 1, w = sinh r; every leaf costs the same, so
        // the strip sum telescopes to 2 pi / K regardless of n.
        const double k = integrate([](double r) { return 1.0 / std::sinh(r); },
                                   annulus.r_inner, annulus.r_outer, spec);
        return 2.0 * kPi / k;
    }
    // leaf gamma_r: v = sinh r, w = sinh r, v^2/w = sinh r
    const double mid = 0.5 * (annulus.r_inner + annulus.r_outer);
    const std::vector<double> grid =
        detail::closed_grid(annulus.r_inner, annulus.r_outer, n_curves, mid);
    std::vector<double> inv_cost;
    inv_cost.reserve(grid.size());
    for (double r : grid) {
        const double k =
            integrate([r](double) { return std::sinh(r); }, 0.0, 2.0 * kPi, spec);
        inv_cost.push_back(1.0 / k);
    }
    return lower_strip_sum(grid, inv_cost);
}

double euclidean_ring_modulus(const EuclideanCircle& inner,
                              const EuclideanCircle& outer) {
    const double dx = outer.x - inner.x;
    const double dt = outer.t - inner.t;
    const double d = std::hypot(dx, dt);
    if (!(d + inner.radius < outer.radius))
        throw NotNested("inner circle must lie strictly inside outer circle");
    if (d <= 1e-14 * outer.radius)
        return 2.0 * kPi / std::log(outer.radius / inner.radius);

    // 1d coordinates along the line of centers, origin at the inner center.
    // The limit points (u, v) of the coaxial pencil are inverse with respect
    // to both circles: u v = r1^2 and (u - d)(v - d) = r2^2, so u + v =
    // (r1^2 + d^2 - r2^2) / d. Strict nesting makes the discriminant
    // positive. The map x -> (x - u)/(x - v) sends the pencil to concentric
    // circles about 0; image radii are read off at the diameter endpoints.
    const double s = (inner.radius * inner.radius + d * d -
                      outer.radius * outer.radius) / d;
    const double disc = 0.25 * s * s - inner.radius * inner.radius;
    const double root = std::sqrt(disc);
    const double u = 0.5 * s - root;
    const double v = 0.5 * s + root;
    const auto image = [&](double x) { return (x - u) / (x - v); };
    const double s_inner =
        std::sqrt(std::abs(image(-inner.radius) * image(inner.radius)));
    const double s_outer =
        std::sqrt(std::abs(image(d - outer.radius) * image(d + outer.radius)));
    return 2.0 * kPi / std::abs(std::log(s_outer / s_inner));
}

namespace {

void attach_warnings(ModulusReport& report) {
    if (report.admissibility.min_integral < 1.0 - kAdmissibilitySlack) {
        report.warnings.push_back(
            "admissibility gap: min subfamily integral " +
            format_value(report.admissibility.min_integral) + " at parameter " +
            format_value(report.admissibility.argmin_parameter) +
            " is below 1; the closed form is certified as a lower bound only");
    }
    if (std::abs(report.density_energy - report.closed_form) > kEnergyMatchTol) {
        report.warnings.push_back(
            "energy mismatch: density energy " +
            format_value(report.density_energy) + " differs from closed form " +
            format_value(report.closed_form) + " beyond 1e-4");
    }
}

} // namespace

ModulusReport verify_report(FamilyKind kind, double a,
                            const QuadratureSpec& spec) {
    if (!is_quad_family(kind))
        throw BadParameters("quad overload of verify_report needs a quad family");
    ModulusReport report;
    report.family = kind;
    report.parameters["a"] = a;
    report.closed_form = (kind == FamilyKind::quad_arcs ? mod_quad_arcs(a)
                                                        : mod_quad_segments(a))
                             .value;
    const DensityField rho = extremal_density(kind, a);
    report.density_energy = energy(rho, spec);
    report.admissibility = admissibility_audit(rho, kDefaultAuditCurves, spec);
    report.discrete_lower_bound =
        foliated_modulus(kind, a, kDefaultFoliationCurves, spec);
    attach_warnings(report);
    return report;
}

ModulusReport verify_report(FamilyKind kind, const Annulus& annulus,
                            const QuadratureSpec& spec) {
    if (is_quad_family(kind))
        throw BadParameters("annulus overload of verify_report needs an annulus family");
    ModulusReport report;
    report.family = kind;
    report.parameters["center_lambda"] = annulus.center.lambda;
    report.parameters["center_t"] = annulus.center.t;
    report.parameters["r_inner"] = annulus.r_inner;
    report.parameters["r_outer"] = annulus.r_outer;
    report.closed_form =
        (kind == FamilyKind::annulus_joining
             ? mod_annulus_joining(annulus.r_inner, annulus.r_outer)
             : mod_annulus_separating(annulus.r_inner, annulus.r_outer))
            .value;
    const DensityField rho = extremal_density(kind, annulus);
    report.density_energy = energy(rho, spec);
    report.admissibility = admissibility_audit(rho, kDefaultAuditCurves, spec);
    report.discrete_lower_bound =
        foliated_modulus(kind, annulus, kDefaultFoliationCurves, spec);
    if (kind == FamilyKind::annulus_joining) {
        report.oracle_value = euclidean_ring_modulus(
            to_euclidean(HyperbolicCircle(annulus.center, annulus.r_inner)),
            to_euclidean(HyperbolicCircle(annulus.center, annulus.r_outer)));
    }
    attach_warnings(report);
    return report;
}

} // namespace hypmod

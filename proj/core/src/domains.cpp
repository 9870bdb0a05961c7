#include "hypmod/domains.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace hypmod {

namespace {
constexpr double kPi = std::numbers::pi;
}

double quad_area_euclidean(double a, double b) {
    if (!(a >= 1.0) || !(b > 0.0))
        throw BadParameters("quad_area_euclidean requires a >= 1 and b > 0");
    return (a * a + b * b) * std::atan(b / a) - (1.0 + b * b) * std::atan(b) +
           b * (a - 1.0);
}

double quad_area_variant(double a) {
    return kPi / 2.0 * (a * a + 2.0) - (a * a + 1.0) * std::atan(a) + (a - 1.0);
}

bool quad_equivalent(const NormalQuad& q1, const NormalQuad& q2, double tol) {
    return std::abs((q1.a - 1.0) / q1.b - (q2.a - 1.0) / q2.b) <= tol;
}

bool contains(const NormalQuad& q, const HPoint& p, double tol) {
    if (std::abs(p.t) > q.b + tol)
        return false;
    // sqrt(1+b^2-t^2) <= lambda <= sqrt(a^2+b^2-t^2), phrased on |z|^2.
    const double rr = p.lambda * p.lambda + p.t * p.t;
    return rr >= 1.0 + q.b * q.b - tol && rr <= q.a * q.a + q.b * q.b + tol;
}

bool contains(const Annulus& a, const HPoint& p, double tol) {
    const double r = dist(p, a.center);
    return r >= a.r_inner - tol && r <= a.r_outer + tol;
}

std::pair<MobiusIsometry, Annulus> normalize_annulus(const Annulus& a) {
    const MobiusIsometry m = centering_isometry(a.center).inverse();
    return {m, Annulus(HPoint(1.0, 0.0), a.r_inner, a.r_outer)};
}

const char* family_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::quad_arcs: return "quad_arcs";
    case FamilyKind::quad_segments: return "quad_segments";
    case FamilyKind::annulus_joining: return "annulus_joining";
    case FamilyKind::annulus_separating: return "annulus_separating";
    }
    return "unknown";
}

bool is_quad_family(FamilyKind kind) {
    return kind == FamilyKind::quad_arcs || kind == FamilyKind::quad_segments;
}

Curve::Curve(double u0, double u1, std::function<HPoint(double)> evaluator,
             std::function<double(double)> hyp_speed, double family_parameter,
             int n_samples)
    : u0_(u0), u1_(u1), evaluator_(std::move(evaluator)),
      hyp_speed_(std::move(hyp_speed)), family_parameter_(family_parameter) {
    if (n_samples < 2)
        throw BadParameters("Curve requires n_samples >= 2");
    samples_.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double u = u0_ + (u1_ - u0_) * static_cast<double>(i) /
                                   static_cast<double>(n_samples - 1);
        samples_.push_back(evaluator_(u));
    }
}

namespace detail {

std::vector<double> closed_grid(double lo, double hi, int n, double single) {
    if (n < 1)
        throw EmptyFamily("need at least one curve");
    std::vector<double> grid;
    grid.reserve(n);
    if (n == 1) {
        grid.push_back(single);
        return grid;
    }
    for (int i = 0; i < n; ++i)
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(n - 1));
    return grid;
}

} // namespace detail

std::vector<Curve> sample_subfamily(FamilyKind kind, double a, int n_curves,
                                    int samples_per_curve) {
    if (!is_quad_family(kind))
        throw BadParameters("quad overload of sample_subfamily needs a quad family");
    const NormalQuad quad(a); // validates a >= 1
    if (quad.degenerate())
        throw DegenerateDomain("Q(1,1) has zero width");
    if (n_curves < 1)
        throw EmptyFamily("sample_subfamily needs n_curves >= 1");

    std::vector<Curve> curves;
    curves.reserve(n_curves);
    if (kind == FamilyKind::quad_arcs) {
        for (double t : detail::closed_grid(-1.0, 1.0, n_curves, 0.0)) {
            const double l1 = std::sqrt(2.0 - t * t);
            const double l2 = std::sqrt(a * a + 1.0 - t * t);
            curves.emplace_back(
                l1, l2, [t](double u) { return HPoint(u, t); },
                [](double u) { return 1.0 / u; }, t, samples_per_curve);
        }
    } else {
        for (double l : detail::closed_grid(1.0, a, n_curves, 1.0)) {
            const double radius = std::sqrt(1.0 + l * l);
            const double s_l = std::atan(1.0 / l);
            curves.emplace_back(
                -s_l, s_l,
                [radius](double s) {
                    return HPoint(radius * std::cos(s), radius * std::sin(s));
                },
                [](double s) { return 1.0 / std::cos(s); }, l, samples_per_curve);
        }
    }
    return curves;
}

std::vector<Curve> sample_subfamily(FamilyKind kind, const Annulus& annulus,
                                    int n_curves, int samples_per_curve) {
    if (is_quad_family(kind))
        throw BadParameters("annulus overload of sample_subfamily needs an annulus family");
    if (n_curves < 1)
        throw EmptyFamily("sample_subfamily needs n_curves >= 1");

    const HPoint center = annulus.center;
    std::vector<Curve> curves;
    curves.reserve(n_curves);
    if (kind == FamilyKind::annulus_joining) {
        for (int i = 0; i < n_curves; ++i) {
            const double theta = 2.0 * kPi * static_cast<double>(i) /
                                 static_cast<double>(n_curves);
            curves.emplace_back(
                annulus.r_inner, annulus.r_outer,
                [center, theta](double s) {
                    return from_polar_about(center, PolarPoint(s, theta));
                },
                [](double) { return 1.0; }, theta, samples_per_curve);
        }
    } else {
        const double mid = 0.5 * (annulus.r_inner + annulus.r_outer);
        for (double r : detail::closed_grid(annulus.r_inner, annulus.r_outer,
                                            n_curves, mid)) {
            const double speed = std::sinh(r);
            curves.emplace_back(
                0.0, 2.0 * kPi,
                [center, r](double s) {
                    return from_polar_about(center, PolarPoint(r, s));
                },
                [speed](double) { return speed; }, r, samples_per_curve);
        }
    }
    return curves;
}

} // namespace hypmod

#include "verify_suite.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "hypmod/polar.hpp"

namespace hypmod::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class SeededGeometry {
public:
    explicit SeededGeometry(unsigned seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

    HPoint point() { return {uniform(0.1, 6.0), uniform(-5.0, 5.0)}; }

    MobiusIsometry isometry() {
        for (;;) {
            const double a = uniform(-2.0, 2.0);
            const double b = uniform(-2.0, 2.0);
            const double c = uniform(-2.0, 2.0);
            const double d = uniform(-2.0, 2.0);
            if (a * d + b * c > 0.1)
                return {a, b, c, d};
        }
    }

private:
    std::mt19937 gen_;
};

CheckResult make_check(std::string name, double value, double threshold) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.threshold = threshold;
    c.pass = value <= threshold;
    return c;
}

CheckResult polar_round_trip_check(int grid_n) {
    double worst = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double r = 5.0 * (i + 1) / grid_n;
        for (int j = 0; j < grid_n; ++j) {
            const double theta = 2.0 * kPi * j / grid_n;
            bool near_branch = false;
            for (double b : {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0, 2.0 * kPi})
                near_branch = near_branch || std::abs(theta - b) < 1e-8;
            if (near_branch)
                continue;
            const PolarPoint back =
                from_cartesian(to_cartesian(PolarPoint(r, theta)));
            worst = std::max(worst, std::abs(back.r - r));
            worst = std::max(worst, std::abs(back.theta - theta));
        }
    }
    return make_check("polar_round_trip_max_err", worst, 1e-10);
}

CheckResult errata_check() {
    double worst = 0.0;
    for (double a : {1.0, 2.0, 3.0, 5.0}) {
        const double gap =
            quad_area_variant(a) - quad_area_euclidean(a, 1.0) - kPi;
        worst = std::max(worst, std::abs(gap));
    }
    return make_check("area_variant_discrepancy_minus_pi", worst, 1e-9);
}

CheckResult quad_cross_ratio_check() {
    const auto ratio = [](double a, double b) {
        return cross_ratio({1.0, -b}, {a, -b}, {a, b}, {1.0, b});
    };
    const double dev = std::abs(ratio(2.0, 1.0) - ratio(3.0, 2.0));
    return make_check("equivalent_quad_cross_ratio_dev", dev, 1e-10);
}

CheckResult reciprocity_check(SeededGeometry& rng) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double r1 = rng.uniform(0.1, 4.9);
        const double r2 = rng.uniform(r1 + 1e-3, 5.0);
        const double prod = mod_annulus_joining(r1, r2).value *
                            mod_annulus_separating(r1, r2).value;
        worst = std::max(worst, std::abs(prod - 1.0));
    }
    return make_check("annulus_reciprocity_max_dev", worst, 1e-12);
}

CheckResult isometry_distance_check(SeededGeometry& rng) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const MobiusIsometry m = rng.isometry();
        const HPoint p = rng.point();
        const HPoint q = rng.point();
        worst = std::max(worst,
                         std::abs(dist(m.apply(p), m.apply(q)) - dist(p, q)));
    }
    return make_check("isometry_distance_invariance", worst, 1e-8);
}

CheckResult isometry_cross_ratio_check(SeededGeometry& rng) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const MobiusIsometry m = rng.isometry();
        const HPoint p1 = rng.point();
        const HPoint p2 = rng.point();
        const HPoint p3 = rng.point();
        const HPoint p4 = rng.point();
        try {
            const auto before = cross_ratio(p1, p2, p3, p4);
            const auto after = cross_ratio(m.apply(p1), m.apply(p2),
                                           m.apply(p3), m.apply(p4));
            worst = std::max(
                worst, std::abs(before - after) / std::max(1.0, std::abs(before)));
        } catch (const DuplicatePoints&) {
        }
    }
    return make_check("isometry_cross_ratio_invariance", worst, 1e-8);
}

CheckResult isometry_curve_integral_check(SeededGeometry& rng,
                                          const QuadratureSpec& spec) {
    const Annulus annulus(HPoint(1, 0), 1.0, 2.0);
    const DensityField rho =
        extremal_density(FamilyKind::annulus_joining, annulus);
    const auto curves =
        sample_subfamily(FamilyKind::annulus_joining, annulus, 8, 33);
    std::vector<double> base;
    base.reserve(curves.size());
    for (const Curve& c : curves)
        base.push_back(curve_integral(rho, c, spec));

    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const MobiusIsometry m = rng.isometry();
        const MobiusIsometry back = m.inverse();
        const Annulus pushed(m.apply(annulus.center), annulus.r_inner,
                             annulus.r_outer);
        const DensityField pushed_rho{
            rho.kind, pushed,
            [rho, back](const HPoint& p) { return rho(back.apply(p)); }};
        for (std::size_t i = 0; i < curves.size(); ++i) {
            const Curve& c = curves[i];
            const Curve image(
                c.u0(), c.u1(), [m, c](double u) { return m.apply(c.at(u)); },
                {}, c.family_parameter(), 33);
            worst = std::max(
                worst, std::abs(curve_integral(pushed_rho, image, spec) - base[i]));
        }
    }
    return make_check("isometry_curve_integral_invariance", worst, 1e-8);
}

} // namespace

VerifySuiteResult run_verify_suite(const std::string& suite, unsigned seed,
                                   int grid_n, double tol) {
    if (suite != "all" && suite != "quad" && suite != "annulus")
        throw BadParameters("verify suite must be all, quad or annulus");

    QuadratureSpec spec;
    spec.abs_tol = tol;

    VerifySuiteResult result;
    result.suite = suite;
    result.seed = seed;
    result.grid_n = grid_n;
    result.tol = tol;

    SeededGeometry rng(seed);

    const bool quad = suite != "annulus";
    const bool annulus = suite != "quad";

    if (quad) {
        result.reports.push_back(verify_report(FamilyKind::quad_arcs, 2.0, spec));
        result.reports.push_back(
            verify_report(FamilyKind::quad_segments, 2.0, spec));
        result.checks.push_back(errata_check());
        result.checks.push_back(quad_cross_ratio_check());
    }
    if (annulus) {
        const Annulus reference(HPoint(1, 0), 1.0, 2.0);
        result.reports.push_back(
            verify_report(FamilyKind::annulus_joining, reference, spec));
        result.reports.push_back(
            verify_report(FamilyKind::annulus_separating, reference, spec));
        result.checks.push_back(reciprocity_check(rng));
        result.checks.push_back(isometry_curve_integral_check(rng, spec));
    }
    result.checks.push_back(polar_round_trip_check(grid_n));
    result.checks.push_back(isometry_distance_check(rng));
    result.checks.push_back(isometry_cross_ratio_check(rng));
    return result;
}

} // namespace hypmod::cli

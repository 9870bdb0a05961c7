#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hypmod/hyp_core.hpp"
#include "hypmod/polar.hpp"
#include "oracles.hpp"

using namespace hypmod;

namespace {
constexpr double kPi = std::numbers::pi;
// acosh(3), cross-checked below by integrating ds_h along the connecting
// geodesic semicircle.
constexpr double kAcosh3 = 1.7627471740390861;
} // namespace

TEST_CASE("HPoint rejects the closed boundary") {
    CHECK_THROWS_AS(HPoint(0.0, 1.0), BadParameters);
    CHECK_THROWS_AS(HPoint(-0.3, 0.0), BadParameters);
    CHECK_NOTHROW(HPoint(1e-12, 0.0));
}

TEST_CASE("dist on reference pairs") {
    CHECK(dist(HPoint(1, 0), HPoint(1, 0)) == 0.0);

    // along the geodesic t = 0 the distance is |log(l2/l1)|
    const double e2 = std::exp(2.0);
    CHECK(dist(HPoint(1, 0), HPoint(e2, 0)) == doctest::Approx(2.0).epsilon(1e-13));

    CHECK(dist(HPoint(1, 1), HPoint(1, -1)) ==
          doctest::Approx(kAcosh3).epsilon(1e-13));
}

TEST_CASE("dist((1,1),(1,-1)) agrees with the geodesic line integral") {
    // the connecting geodesic is the semicircle |z| = sqrt(2); on it
    // ds_h = d phi / cos(phi)
    const double oracle_len = oracle::integrate(
        [](double phi) { return 1.0 / std::cos(phi); }, -kPi / 4.0, kPi / 4.0);
    CHECK(dist(HPoint(1, 1), HPoint(1, -1)) ==
          doctest::Approx(oracle_len).epsilon(1e-12));
    CHECK(oracle_len == doctest::Approx(kAcosh3).epsilon(1e-12));
}

TEST_CASE("dist is a metric on sampled triples") {
    oracle::Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const HPoint p = rng.point();
        const HPoint q = rng.point();
        const HPoint r = rng.point();
        CHECK(dist(p, q) == dist(q, p));
        CHECK(dist(p, q) >= 0.0);
        CHECK(dist(p, r) <= dist(p, q) + dist(q, r) + 1e-12);
    }
}

TEST_CASE("MobiusIsometry normalization") {
    const MobiusIsometry m(2, 0, 0, 2); // det 4, rescaled
    CHECK(m.a == doctest::Approx(1.0));
    CHECK(m.d == doctest::Approx(1.0));
    CHECK_THROWS_AS(MobiusIsometry(1, 0, 0, -1), BadParameters);
    CHECK_THROWS_AS(MobiusIsometry(0, 0, 0, 0), BadParameters);

    oracle::Rng rng(102);
    for (int i = 0; i < 100; ++i) {
        const MobiusIsometry r = rng.isometry();
        CHECK(r.a * r.d + r.b * r.c == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("apply: identity and inversion") {
    const HPoint p(3.7, -2.0);
    const HPoint q = MobiusIsometry::identity().apply(p);
    CHECK(q.lambda == p.lambda);
    CHECK(q.t == p.t);

    // theta = pi rotation about the base point is z -> 1/z
    const MobiusIsometry inv = MobiusIsometry::rotation_about_base(kPi);
    const HPoint r = inv.apply(HPoint(std::exp(1.0), 0.0));
    CHECK(r.lambda == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(r.t == doctest::Approx(0.0));

    // same point by direct complex arithmetic (a z + i b)/(i c z + d)
    const std::complex<double> z(std::exp(1.0), 0.0);
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> w =
        (inv.a * z + i * inv.b) / (i * inv.c * z + inv.d);
    CHECK(r.lambda == doctest::Approx(w.real()).epsilon(1e-14));
    CHECK(r.t == doctest::Approx(w.imag()).epsilon(1e-14));

    // and it matches the polar chart at (r, theta) = (1, pi)
    const HPoint via_polar = to_cartesian(PolarPoint(1.0, kPi));
    CHECK(r.lambda == doctest::Approx(via_polar.lambda).epsilon(1e-14));
}

TEST_CASE("isometries preserve distance and the half-plane") {
    oracle::Rng rng(103);
    for (int i = 0; i < 100; ++i) {
        const MobiusIsometry m = rng.isometry();
        const HPoint p = rng.point();
        const HPoint q = rng.point();
        const HPoint mp = m.apply(p);
        const HPoint mq = m.apply(q);
        CHECK(mp.lambda > 0.0);
        CHECK(dist(mp, mq) == doctest::Approx(dist(p, q)).epsilon(1e-12));
    }
}

TEST_CASE("composition") {
    oracle::Rng rng(104);
    const MobiusIsometry id = MobiusIsometry::identity();
    for (int i = 0; i < 50; ++i) {
        const MobiusIsometry m = rng.isometry();
        const MobiusIsometry m2 = rng.isometry();

        const MobiusIsometry left = id * m;
        CHECK(left.a == doctest::Approx(m.a).epsilon(1e-14));
        CHECK(left.b == doctest::Approx(m.b).epsilon(1e-14));
        CHECK(left.c == doctest::Approx(m.c).epsilon(1e-14));
        CHECK(left.d == doctest::Approx(m.d).epsilon(1e-14));

        const MobiusIsometry unit = m * m.inverse();
        CHECK(unit.a == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(unit.b == doctest::Approx(0.0));
        CHECK(unit.c == doctest::Approx(0.0));
        CHECK(unit.d == doctest::Approx(1.0).epsilon(1e-12));

        // pointwise agreement of (m * m2) with m after m2
        const HPoint p = rng.point();
        const HPoint lhs = (m * m2).apply(p);
        const HPoint rhs = m.apply(m2.apply(p));
        CHECK(lhs.lambda == doctest::Approx(rhs.lambda).epsilon(1e-12));
        CHECK(lhs.t == doctest::Approx(rhs.t).epsilon(1e-12));
    }

    // z -> 1/z composed with itself is the identity on coefficients
    const MobiusIsometry inv = MobiusIsometry::rotation_about_base(kPi);
    const MobiusIsometry sq = inv * inv;
    CHECK(std::abs(sq.a * sq.d + sq.b * sq.c) == doctest::Approx(1.0));
    CHECK(std::abs(sq.b) == doctest::Approx(0.0));
    CHECK(std::abs(sq.c) == doctest::Approx(0.0));
    // a*d = 1 with a = d up to a global sign, which acts trivially
    CHECK(std::abs(sq.a) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("cross_ratio reference values") {
    // corners of Q(2,1) and of the equivalent Q(3,2): both come out 5/4
    const auto c1 = cross_ratio({1, -1}, {2, -1}, {2, 1}, {1, 1});
    CHECK(c1.real() == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(c1.imag() == doctest::Approx(0.0));
    const auto c2 = cross_ratio({1, -2}, {3, -2}, {3, 2}, {1, 2});
    CHECK(c2.real() == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(std::abs(c1 - c2) < 1e-14);
}

TEST_CASE("cross_ratio rejects duplicates") {
    CHECK_THROWS_AS(cross_ratio({1, 0}, {1, 0}, {2, 1}, {3, 1}), DuplicatePoints);
    CHECK_THROWS_AS(cross_ratio({1, 0}, {2, 0}, {2, 1}, {2, 1}), DuplicatePoints);
    CHECK_THROWS_AS(
        cross_ratio(ExtPoint::infinity(), ExtPoint::infinity(), {2, 1}, {3, 1}),
        DuplicatePoints);
}

TEST_CASE("cross_ratio limit convention at infinity") {
    // compare each infinity placement against a far-away finite stand-in
    const ExtPoint z2{0.3, -0.4}, z3{1.7, 0.2}, z4{0.9, 2.1};
    const ExtPoint far{1e9, 1e9};
    const auto lim = cross_ratio(ExtPoint::infinity(), z2, z3, z4);
    const auto fin = cross_ratio(far, z2, z3, z4);
    CHECK(std::abs(lim - fin) < 1e-6);

    const auto lim4 = cross_ratio(z2, z3, z4, ExtPoint::infinity());
    const auto fin4 = cross_ratio(z2, z3, z4, far);
    CHECK(std::abs(lim4 - fin4) < 1e-6);
}

TEST_CASE("cross_ratio is Moebius invariant") {
    oracle::Rng rng(105);
    for (int i = 0; i < 50; ++i) {
        const MobiusIsometry m = rng.isometry();
        const HPoint p1 = rng.point();
        const HPoint p2 = rng.point();
        const HPoint p3 = rng.point();
        const HPoint p4 = rng.point();
        std::complex<double> before, after;
        try {
            before = cross_ratio(p1, p2, p3, p4);
            after = cross_ratio(m.apply(p1), m.apply(p2), m.apply(p3), m.apply(p4));
        } catch (const DuplicatePoints&) {
            continue;
        }
        CHECK(std::abs(before - after) <= 1e-10 * std::max(1.0, std::abs(before)));
    }
}

TEST_CASE("hyperbolic circles are Euclidean circles") {
    const EuclideanCircle c1 = to_euclidean(HyperbolicCircle(HPoint(1, 0), 1.0));
    CHECK(c1.x == doctest::Approx(1.5430806348152437).epsilon(1e-14));
    CHECK(c1.t == doctest::Approx(0.0));
    CHECK(c1.radius == doctest::Approx(1.1752011936438014).epsilon(1e-14));

    const EuclideanCircle c2 = to_euclidean(HyperbolicCircle(HPoint(2, 3), 0.5));
    CHECK(c2.x == doctest::Approx(2.2552519304127616).epsilon(1e-14));
    CHECK(c2.t == doctest::Approx(3.0));
    CHECK(c2.radius == doctest::Approx(1.0421906109874947).epsilon(1e-14));

    CHECK_THROWS_AS(HyperbolicCircle(HPoint(1, 0), 0.0), BadParameters);
}

TEST_CASE("points at hyperbolic distance R lie on the Euclidean circle") {
    oracle::Rng rng(106);
    for (int trial = 0; trial < 100; ++trial) {
        const HPoint center = rng.point(0.2, 5.0, 4.0);
        const double radius = rng.uniform(0.05, 2.5);
        const EuclideanCircle ec = to_euclidean(HyperbolicCircle(center, radius));
        for (int k = 0; k < 12; ++k) {
            const double theta = rng.uniform(0.0, 2.0 * kPi);
            const HPoint p = from_polar_about(center, PolarPoint(radius, theta));
            CHECK(dist(p, center) == doctest::Approx(radius).epsilon(1e-10));
            const double resid =
                std::hypot(p.lambda - ec.x, p.t - ec.t) - ec.radius;
            CHECK(std::abs(resid) < 1e-10 * std::max(1.0, ec.radius));
        }
    }
}

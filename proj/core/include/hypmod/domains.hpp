#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypmod/hyp_core.hpp"
#include "hypmod/polar.hpp"

namespace hypmod {

/// Normal quadrilateral Q(a,b): the set of (lambda, t) with -b <= t <= b and
/// sqrt(1 + b^2 - t^2) <= lambda <= sqrt(a^2 + b^2 - t^2). Its sides are two
/// concentric circular arcs and two horizontal segments meeting at the
/// corners (1, +-b) and (a, +-b). a = 1 is allowed but degenerate.
struct NormalQuad {
    double a;
    double b;

    explicit NormalQuad(double a_, double b_ = 1.0) : a(a_), b(b_) {
        if (!(a >= 1.0) || !(b > 0.0))
            throw BadParameters("NormalQuad requires a >= 1 and b > 0");
    }

    bool degenerate() const { return a == 1.0; }
};

/// Hyperbolic annulus: points at hyperbolic distance in [r_inner, r_outer]
/// from the center.
struct Annulus {
    HPoint center;
    double r_inner;
    double r_outer;

    Annulus(HPoint center_, double r_inner_, double r_outer_)
        : center(center_), r_inner(r_inner_), r_outer(r_outer_) {
        if (!(r_inner > 0.0) || !(r_inner < r_outer))
            throw BadParameters("Annulus requires 0 < r_inner < r_outer");
    }
};

/// Euclidean area of Q(a,b):
/// (a^2+b^2) atan(b/a) - (1+b^2) atan(b) + b(a-1). Zero iff a = 1.
double quad_area_euclidean(double a, double b);

/// Uncorrected closed form for the area of Q(a,1). It exceeds
/// quad_area_euclidean(a, 1) by exactly pi for every a; it is kept so that
/// reports can surface the discrepancy, and feeds no modulus formula.
double quad_area_variant(double a);

/// Q(a,b) and Q(a',b') are conformally equivalent iff (a-1)/b = (a'-1)/b'
/// (equality of corner cross-ratios).
bool quad_equivalent(const NormalQuad& q1, const NormalQuad& q2, double tol = 1e-12);

/// Closed-set membership. The defining inequalities carry a slack of `tol`
/// so that boundary points produced by a different arithmetic path still
/// count as inside.
bool contains(const NormalQuad& q, const HPoint& p, double tol = 1e-12);
bool contains(const Annulus& a, const HPoint& p, double tol = 1e-12);

/// The isometry z -> (z - i t0) / lambda0 carrying the annulus center to the
/// base point (1,0), together with the recentered annulus. Hyperbolic radii
/// are preserved (isometries cannot rescale them).
std::pair<MobiusIsometry, Annulus> normalize_annulus(const Annulus& a);

/// The four distinguished curve families.
enum class FamilyKind {
    quad_arcs,          // joins the two circular boundary arcs of Q(a,1)
    quad_segments,      // joins the two horizontal boundary segments of Q(a,1)
    annulus_joining,    // joins the two boundary circles of an annulus
    annulus_separating, // closed curves separating the boundary circles
};

const char* family_name(FamilyKind kind);
bool is_quad_family(FamilyKind kind);

inline constexpr int kDefaultCurveSamples = 2049;

/// Parametric path u -> HPoint over [u0, u1] with `n_samples` equispaced
/// sample points materialized up front. `hyp_speed`, when present, returns
/// the exact hyperbolic speed |gamma'(u)|_h; integrators fall back to central
/// differences otherwise.
class Curve {
public:
    Curve(double u0, double u1, std::function<HPoint(double)> evaluator,
          std::function<double(double)> hyp_speed = {},
          double family_parameter = 0.0, int n_samples = kDefaultCurveSamples);

    double u0() const { return u0_; }
    double u1() const { return u1_; }
    HPoint at(double u) const { return evaluator_(u); }
    const std::function<double(double)>& hyp_speed() const { return hyp_speed_; }
    double family_parameter() const { return family_parameter_; }
    const std::vector<HPoint>& samples() const { return samples_; }

private:
    double u0_;
    double u1_;
    std::function<HPoint(double)> evaluator_;
    std::function<double(double)> hyp_speed_;
    double family_parameter_;
    std::vector<HPoint> samples_;
};

/// The foliating one-parameter subfamily of the given kind, with parameters
/// equispaced over their range:
///   quad_arcs:          gamma_t(lambda) = (lambda, t), t over [-1, 1]
///   quad_segments:      gamma_l(s) = sqrt(1+l^2)(cos s, sin s),
///                       s over [-atan(1/l), atan(1/l)], l over [1, a]
///   annulus_joining:    radial polar segments, theta over [0, 2pi)
///   annulus_separating: polar circles r = const, r over [r_inner, r_outer]
/// Closed parameter ranges include their endpoints; the theta range stays
/// half-open. With n_curves = 1 the quad_arcs/annulus_separating families
/// pick the central curve and quad_segments the inner arc l = 1.
/// Quad overload works on Q(a,1); throws DegenerateDomain when a = 1.
std::vector<Curve> sample_subfamily(FamilyKind kind, double a, int n_curves,
                                    int samples_per_curve = kDefaultCurveSamples);
std::vector<Curve> sample_subfamily(FamilyKind kind, const Annulus& annulus,
                                    int n_curves,
                                    int samples_per_curve = kDefaultCurveSamples);

namespace detail {
/// Equispaced closed grid over [lo, hi]; n = 1 picks the prescribed fallback.
std::vector<double> closed_grid(double lo, double hi, int n, double single);
} // namespace detail

} // namespace hypmod

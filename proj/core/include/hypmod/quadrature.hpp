#pragma once

#include <cmath>
#include <vector>

#include "hypmod/errors.hpp"

namespace hypmod {

/// Composite Gauss-Legendre configuration. `panels` is the starting panel
/// count; on a failed error estimate the panel count doubles, up to 2^20
/// panels in total.
struct QuadratureSpec {
    int panels = 64;
    int nodes_per_panel = 16;
    double abs_tol = 1e-9;
};

/// Nodes/weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule of the given order, 2 <= n <= 64.
const GaussLegendreRule& gauss_legendre(int n);

namespace detail {

inline void validate(const QuadratureSpec& spec) {
    if (spec.panels < 1)
        throw BadParameters("QuadratureSpec requires panels >= 1");
    if (spec.nodes_per_panel < 2 || spec.nodes_per_panel > 64)
        throw BadParameters("QuadratureSpec requires nodes_per_panel in [2, 64]");
    if (!(spec.abs_tol > 0.0))
        throw BadParameters("QuadratureSpec requires abs_tol > 0");
}

constexpr int kMaxPanels = 1 << 20;

template <typename F>
double composite(F&& f, double a, double b, int panels, const GaussLegendreRule& rule) {
    const double h = (b - a) / panels;
    const std::size_t n = rule.nodes.size();
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += rule.weights[i] * f(mid + half * rule.nodes[i]);
        sum += s * half;
    }
    return sum;
}

} // namespace detail

/// Integrate f over [a, b]; the error estimate is the change under panel
/// doubling. Throws QuadratureFailure once 2^20 panels fail to reach abs_tol.
template <typename F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec) {
    detail::validate(spec);
    if (a == b)
        return 0.0;
    const GaussLegendreRule& rule = gauss_legendre(spec.nodes_per_panel);
    int panels = spec.panels;
    double prev = detail::composite(f, a, b, panels, rule);
    for (panels *= 2; panels <= detail::kMaxPanels; panels *= 2) {
        const double cur = detail::composite(f, a, b, panels, rule);
        if (std::abs(cur - prev) <= spec.abs_tol)
            return cur;
        prev = cur;
    }
    throw QuadratureFailure("1d integral did not reach abs_tol by 2^20 panels");
}

/// Tensor integral of f(x, y) over a <= x <= b, ylo(x) <= y <= yhi(x).
/// Refinement doubles the panel count of both dimensions; failure is declared
/// once the grid would exceed 2^20 panels in total.
template <typename F, typename Lo, typename Hi>
double integrate_2d(F&& f, double ax, double bx, Lo&& ylo, Hi&& yhi,
                    const QuadratureSpec& spec) {
    detail::validate(spec);
    if (ax == bx)
        return 0.0;
    const GaussLegendreRule& rule = gauss_legendre(spec.nodes_per_panel);
    const std::size_t n = rule.nodes.size();

    auto tensor = [&](int panels) {
        const double hx = (bx - ax) / panels;
        double sum = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double midx = ax + (p + 0.5) * hx;
            for (std::size_t i = 0; i < n; ++i) {
                const double x = midx + 0.5 * hx * rule.nodes[i];
                const double lo = ylo(x);
                const double hi = yhi(x);
                const double inner =
                    lo == hi ? 0.0
                             : detail::composite([&](double y) { return f(x, y); },
                                                 lo, hi, panels, rule);
                sum += rule.weights[i] * inner * 0.5 * hx;
            }
        }
        return sum;
    };

    int panels = spec.panels;
    double prev = tensor(panels);
    for (panels *= 2; panels * panels <= detail::kMaxPanels; panels *= 2) {
        const double cur = tensor(panels);
        if (std::abs(cur - prev) <= spec.abs_tol)
            return cur;
        prev = cur;
    }
    throw QuadratureFailure("2d integral did not reach abs_tol by 2^20 panels");
}

} // namespace hypmod

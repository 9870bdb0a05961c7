#include "hypmod/quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>

namespace hypmod {

namespace {

// Roots of the Legendre polynomial by Newton iteration on the three-term
// recurrence, exploiting the +/- symmetry of the root set.
GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-16)
                break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 2 || n > 64)
        throw BadParameters("gauss_legendre order must be in [2, 64]");
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

} // namespace hypmod

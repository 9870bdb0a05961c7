#include "hypmod/specfun.hpp"

#include <cmath>
#include <numbers>

namespace hypmod {

namespace {
constexpr double kSeriesTail = 2.5e-13;
constexpr double kCatalan = 0.9159655941772190150546185696791;
} // namespace

SpecFunResult ti2(double x) {
    if (x < 0.0)
        throw NegativeArgument("ti2 is only defined for x >= 0");
    if (x == 0.0)
        return {0.0, 0.0};
    if (x > 1.0) {
        const SpecFunResult base = ti2(1.0 / x);
        const double value = base.value + std::numbers::pi / 2.0 * std::log(x);
        return {value, base.est_abs_error + 4e-16 * std::abs(value)};
    }

    // Alternating series with Kahan compensation; the remainder after
    // stopping is bounded by the first omitted term.
    const double x2 = x * x;
    double power = x;
    double sum = 0.0;
    double comp = 0.0;
    long k = 0;
    double next = power; // magnitude of term k
    for (;;) {
        const double denom = static_cast<double>(2 * k + 1);
        double term = power / (denom * denom);
        if (k % 2 == 1)
            term = -term;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        ++k;
        power *= x2;
        const double dn = static_cast<double>(2 * k + 1);
        next = power / (dn * dn);
        if (next <= kSeriesTail)
            break;
    }
    return {sum, next + 4e-16};
}

double catalan() { return kCatalan; }

} // namespace hypmod

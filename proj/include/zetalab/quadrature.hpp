#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/summation.hpp"

namespace zetalab {

/// A real function on an open interval together with its first three
/// derivatives, supplied analytically by the caller. K involves a squared
/// second derivative in the denominator, where finite differences would lose
/// half the digits.
struct IntegrandBundle {
    std::function<double(double)> f;
    std::function<double(double)> f1;
    std::function<double(double)> f2;
    std::function<double(double)> f3;
    double lo;
    double hi;
};

/// Builds a bundle and validates that central finite differences of f match
/// f1 to 1e-6 relative at 20 interior probe points.
inline IntegrandBundle make_integrand_bundle(std::function<double(double)> f,
                                             std::function<double(double)> f1,
                                             std::function<double(double)> f2,
                                             std::function<double(double)> f3,
                                             double lo, double hi) {
    if (!(lo < hi))
        throw precondition_error("make_integrand_bundle: empty domain");
    IntegrandBundle b{std::move(f), std::move(f1), std::move(f2), std::move(f3),
                      lo, hi};
    const double width = hi - lo;
    for (int i = 0; i < 20; ++i) {
        const double x = lo + width * (i + 0.5) / 20.0;
        const double h = std::min(1e-6 * width,
                                  0.5 * std::min(x - lo, hi - x));
        const double fd = (b.f(x + h) - b.f(x - h)) / (2.0 * h);
        const double d = b.f1(x);
        if (!(std::abs(fd - d) <= 1e-6 * (std::abs(d) + 1.0)))
            throw precondition_error(
                "make_integrand_bundle: f1 disagrees with finite differences "
                "of f at x = " + std::to_string(x));
    }
    return b;
}

/// K-derivative  K_f(x) = f'(x) f'''(x) / f''(x)^2. Affine-invariant,
/// bounded for the endpoint-singular integrands sin(pi x)^{-s}, s > -1.
inline double k_derivative(const IntegrandBundle& b, double x) {
    if (!(x > b.lo && x < b.hi))
        throw precondition_error("k_derivative: x not interior to the domain");
    const double d1 = b.f1(x);
    const double d2 = b.f2(x);
    const double d3 = b.f3(x);
    if (std::abs(d2) < 1e-12 * (std::abs(d1) + std::abs(d3) + 1.0))
        throw degenerate_error("k_derivative: inflection point (f'' ~ 0)");
    return d1 * d3 / (d2 * d2);
}

namespace detail {

inline double rolle_residual(const IntegrandBundle& b, double x, double a,
                             double delta_f) {
    return std::abs(b.f1(x) * 2.0 * a - delta_f);
}

} // namespace detail

/// Rolle point: the solution x(a) of f(x0+a) - f(x0-a) = 2a f'(x) closest to
/// x0 (rightmost on ties), located by bracketed bisection expanding from the
/// midpoint outward in steps of a/8.
inline double rolle_point(const IntegrandBundle& b, double x0, double a) {
    if (!(a > 0.0) || !(x0 - a >= b.lo) || !(x0 + a <= b.hi))
        throw precondition_error("rolle_point: [x0-a, x0+a] not inside domain");
    const double delta_f = b.f(x0 + a) - b.f(x0 - a);
    const double slope = delta_f / (2.0 * a);
    const double tol =
        1e-12 * (std::abs(b.f(x0 + a)) + std::abs(b.f(x0 - a)) + 1.0);
    auto phi = [&](double x) { return b.f1(x) - slope; };
    if (detail::rolle_residual(b, x0, a, delta_f) <= tol) return x0;

    const double step = a / 8.0;
    double blo = 0.0, bhi = 0.0;
    bool found = false;
    for (int j = 1; j <= 8 && !found; ++j) {
        // right of x0 first: ties resolve to the right
        const double r0 = x0 + (j - 1) * step, r1 = x0 + j * step;
        if (phi(r0) * phi(r1) <= 0.0) {
            blo = r0;
            bhi = r1;
            found = true;
            break;
        }
        const double l0 = x0 - j * step, l1 = x0 - (j - 1) * step;
        if (phi(l0) * phi(l1) <= 0.0) {
            blo = l0;
            bhi = l1;
            found = true;
        }
    }
    if (!found)
        throw convergence_error(
            "rolle_point: no sign change bracketed; derivative data "
            "inconsistent with the mean value theorem");
    // bisect all the way to the width floor; the residual criterion is then
    // verified as a postcondition rather than used as the stopping rule, so
    // per-interval residuals sit at the rounding floor and telescoping sums
    // of f'(r_k) h stay accurate
    double mid = 0.5 * (blo + bhi);
    for (int it = 0; it < 120; ++it) {
        mid = 0.5 * (blo + bhi);
        if (bhi - blo < 2.0 * std::numeric_limits<double>::epsilon() *
                            (std::abs(mid) + a))
            break;
        if (phi(blo) * phi(mid) <= 0.0)
            bhi = mid;
        else
            blo = mid;
    }
    if (detail::rolle_residual(b, mid, a, delta_f) <= tol) return mid;
    throw convergence_error("rolle_point: bisection stalled above tolerance");
}

/// Right-hand side of the Rolle-Newton-Cotes estimate for the offset Riemann
/// sum (1/n) sum_k g((k+y)/n) on the bundle's interval:
///     (M1 / n^2) |g'(hi - h/2 + y h) - g'(lo + (y + 1/2) h)|,  h = (hi-lo)/n,
/// with M1 = M/6 and M either caller-supplied or 1.5x the sampled max of |K|.
/// Requires g'' of one sign (sampled at 10^3 points).
inline double riemann_sum_error_bound(const IntegrandBundle& b, std::int64_t n,
                                      double y,
                                      std::optional<double> caller_M = {}) {
    if (n < 1)
        throw precondition_error("riemann_sum_error_bound: n must be >= 1");
    if (!(y >= 0.0 && y < 1.0))
        throw precondition_error("riemann_sum_error_bound: y must lie in [0,1)");
    const double width = b.hi - b.lo;
    double max_k = 0.0;
    int sign = 0;
    for (int i = 0; i < 1000; ++i) {
        const double x = b.lo + width * (i + 0.5) / 1000.0;
        const double d2 = b.f2(x);
        const int s = d2 > 0.0 ? 1 : (d2 < 0.0 ? -1 : 0);
        if (sign == 0) sign = s;
        if (s != 0 && sign != 0 && s != sign)
            throw degenerate_error(
                "riemann_sum_error_bound: f'' changes sign on the interval");
        const double d1 = b.f1(x), d3 = b.f3(x);
        if (d2 != 0.0) max_k = std::max(max_k, std::abs(d1 * d3 / (d2 * d2)));
    }
    if (sign == 0)
        throw degenerate_error("riemann_sum_error_bound: f'' vanishes on the "
                               "sampled interval");
    const double M = caller_M ? *caller_M : 1.5 * max_k;
    const double M1 = M / 6.0;
    const double h = width / static_cast<double>(n);
    const double right = b.f1(b.hi - 0.5 * h + y * h);
    const double left = b.f1(b.lo + (y + 0.5) * h);
    // bounds |(1/n) sum_k g(lo + (k+y) h) - (1/width) integral over (lo,hi)|;
    // on (0,1) this is the displayed (M1/n^2)[g'(1 - 1/2n + y/n) - g'((y+1/2)/n)]
    return M1 * h * h * std::abs(right - left) / width;
}

struct QuadratureReport {
    double estimate;
    std::int64_t n_intervals;
    double correction_total;  // sum of the a^3 correction terms
    double bound;             // error bound when separately computed
};

/// Midpoint rule with the K-derivative correction
///     sum_k [ f(y_k) 2a + K_f(y_k) f''(y_k) (2a) a^2 / 6 ]
/// over a uniform partition of (lo, hi) into n intervals of half-width a.
/// Intervals where the inflection signal fires fall back to the plain
/// midpoint term.
inline QuadratureReport corrected_midpoint_integrate(const IntegrandBundle& b,
                                                     double lo, double hi,
                                                     std::int64_t n) {
    if (n < 2)
        throw precondition_error("corrected_midpoint_integrate: n must be >= 2");
    if (!(lo < hi) || lo < b.lo - 1e-15 || hi > b.hi + 1e-15)
        throw precondition_error(
            "corrected_midpoint_integrate: (lo, hi) outside domain closure");
    const double a = (hi - lo) / (2.0 * static_cast<double>(n));
    compensated_sum est, corr;
    for (std::int64_t k = 0; k < n; ++k) {
        const double y = lo + (2.0 * static_cast<double>(k) + 1.0) * a;
        const double fy = b.f(y);
        double c = 0.0;
        try {
            const double K = k_derivative(b, y);
            c = K * b.f2(y) * (2.0 * a) * a * a / 6.0;
        } catch (const degenerate_error&) {
            // plain midpoint on intervals containing an inflection point
        }
        const double term = fy * 2.0 * a + c;
        if (!std::isfinite(term))
            throw error("corrected_midpoint_integrate: non-finite term at x = " +
                        std::to_string(y));
        est.add(term);
        corr.add(c);
    }
    // the midpoint estimate is the y = 1/2 offset Riemann sum, so the
    // theorem's bound applies when f'' keeps one sign over the full domain
    double bound = std::numeric_limits<double>::quiet_NaN();
    if (lo == b.lo && hi == b.hi) {
        try {
            bound = riemann_sum_error_bound(b, n, 0.5) * (hi - lo);
        } catch (const zetalab::error&) {
        }
    }
    return {est.value(), n, corr.value(), bound};
}

/// Built-in integrands with analytic derivative stacks. "power", "csc-pow"
/// and "mobius" take the exponent / coefficients through the s parameter.
inline IntegrandBundle make_named_integrand(const std::string& name,
                                            double s = 0.5) {
    using std::cos;
    using std::exp;
    using std::log;
    using std::sin;
    const double pi = std::numbers::pi;
    if (name == "csc-pow") {
        // f = (2 sin(pi x))^{-s} on (0,1)
        const double c = std::pow(2.0, -s);
        auto v = [](double u) { return std::sin(u); };
        return IntegrandBundle{
            [c, s, pi, v](double x) { return c * std::pow(v(pi * x), -s); },
            [c, s, pi, v](double x) {
                return -s * pi * c * std::pow(v(pi * x), -s - 1) * cos(pi * x);
            },
            [c, s, pi, v](double x) {
                const double sn = v(pi * x);
                return s * pi * pi * c * std::pow(sn, -s - 2) *
                       ((s + 1.0) - s * sn * sn);
            },
            [c, s, pi, v](double x) {
                const double sn = v(pi * x);
                return -s * pi * pi * pi * c * cos(pi * x) *
                       std::pow(sn, -s - 3) *
                       ((s + 1.0) * (s + 2.0) - s * s * sn * sn);
            },
            0.0, 1.0};
    }
    if (name == "cot") {
        // f = cot(pi x) on (0,1); K = 1 + sec^2(pi x)/2
        return IntegrandBundle{
            [pi](double x) { return cos(pi * x) / sin(pi * x); },
            [pi](double x) {
                const double cs = 1.0 / sin(pi * x);
                return -pi * cs * cs;
            },
            [pi](double x) {
                const double cs = 1.0 / sin(pi * x);
                return 2.0 * pi * pi * cs * cs * (cos(pi * x) / sin(pi * x));
            },
            [pi](double x) {
                const double cs = 1.0 / sin(pi * x);
                const double ct = cos(pi * x) / sin(pi * x);
                return -2.0 * pi * pi * pi * cs * cs *
                       (2.0 * ct * ct + cs * cs);
            },
            0.0, 1.0};
    }
    if (name == "log-sin") {
        // f = log(sin(pi x)) on (0,1); K = 2 cos^2(pi x)
        return IntegrandBundle{
            [pi](double x) { return log(sin(pi * x)); },
            [pi](double x) { return pi * cos(pi * x) / sin(pi * x); },
            [pi](double x) {
                const double cs = 1.0 / sin(pi * x);
                return -pi * pi * cs * cs;
            },
            [pi](double x) {
                const double cs = 1.0 / sin(pi * x);
                return 2.0 * pi * pi * pi * cs * cs *
                       (cos(pi * x) / sin(pi * x));
            },
            0.0, 1.0};
    }
    if (name == "power") {
        // f = x^s on (0,1); K = (s-2)/(s-1)
        return IntegrandBundle{
            [s](double x) { return std::pow(x, s); },
            [s](double x) { return s * std::pow(x, s - 1); },
            [s](double x) { return s * (s - 1) * std::pow(x, s - 2); },
            [s](double x) { return s * (s - 1) * (s - 2) * std::pow(x, s - 3); },
            0.0, 1.0};
    }
    if (name == "recip") {
        // f = 1/x on (0,1); K = 3/2
        return IntegrandBundle{
            [](double x) { return 1.0 / x; },
            [](double x) { return -1.0 / (x * x); },
            [](double x) { return 2.0 / (x * x * x); },
            [](double x) { return -6.0 / (x * x * x * x); },
            0.0, 1.0};
    }
    if (name == "exp") {
        // K = 1
        return IntegrandBundle{[](double x) { return exp(x); },
                               [](double x) { return exp(x); },
                               [](double x) { return exp(x); },
                               [](double x) { return exp(x); }, 0.0, 1.0};
    }
    if (name == "log") {
        // K = 2
        return IntegrandBundle{
            [](double x) { return log(x); },
            [](double x) { return 1.0 / x; },
            [](double x) { return -1.0 / (x * x); },
            [](double x) { return 2.0 / (x * x * x); }, 0.0, 1.0};
    }
    if (name == "sin") {
        // f = sin x on (0, pi); K = -cot^2 x
        return IntegrandBundle{[](double x) { return sin(x); },
                               [](double x) { return cos(x); },
                               [](double x) { return -sin(x); },
                               [](double x) { return -cos(x); }, 0.0, pi};
    }
    if (name == "mobius") {
        // f = (2x + 1)/(x + 3) on (0,1); K = 3/2
        const double det = 2.0 * 3.0 - 1.0 * 1.0;
        return IntegrandBundle{
            [](double x) { return (2.0 * x + 1.0) / (x + 3.0); },
            [det](double x) {
                const double d = x + 3.0;
                return det / (d * d);
            },
            [det](double x) {
                const double d = x + 3.0;
                return -2.0 * det / (d * d * d);
            },
            [det](double x) {
                const double d = x + 3.0;
                return 6.0 * det / (d * d * d * d);
            },
            0.0, 1.0};
    }
    throw precondition_error("make_named_integrand: unknown integrand '" +
                             name + "'");
}

} // namespace zetalab

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/rational.hpp"
#include "zetalab/summation.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

/// Birkhoff renormalization  (T_s f)(y) = n^{-s} sum_{k=0}^{n-1} f((y+k)/n).
/// cot(pi x) is a fixed point for s = 1, sin^{-2}(pi x) for s = 2.
template <class F>
double birkhoff_transform(F&& f, std::int64_t n, double weight_exponent,
                          double y) {
    if (n < 1) throw precondition_error("birkhoff_transform: n must be >= 1");
    compensated_sum acc;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::int64_t k = 0; k < n; ++k) {
        const double v = f((y + static_cast<double>(k)) * inv_n);
        if (!std::isfinite(v))
            throw precondition_error(
                "birkhoff_transform: integrand not finite at sample point");
        acc.add(v);
    }
    return acc.value() *
           std::pow(static_cast<double>(n), -weight_exponent);
}

struct BaselResult {
    Rational exact;       // (n^2 - 1)/12, reduced
    double zeta_value;    // floating zeta_n(2)
};

/// Discrete Basel value zeta_n(2) = (n^2 - 1)/12, cross-checked against the
/// floating evaluation to 1e-10 * n^2.
inline BaselResult discrete_basel(std::int64_t n) {
    if (n < 2) throw precondition_error("discrete_basel: n must be >= 2");
    const Rational exact(static_cast<detail::int128>(n) * n - 1, 12);
    const double z = zeta_eval(n, {2.0, 0.0}).value.real();
    const double nn = static_cast<double>(n) * static_cast<double>(n);
    if (std::abs(z - exact.to_double()) > 1e-10 * nn)
        throw crosscheck_error("discrete_basel: floating sum disagrees with "
                               "(n^2-1)/12 beyond 1e-10 * n^2");
    return {exact, z};
}

struct Sin4Result {
    Rational exact;     // (n^2-1)(n^2+11)/45, reduced
    double float_sum;   // direct sum of sin^{-4}(pi k/n)
};

/// sum_{k=1}^{n-1} sin^{-4}(pi k/n) = (n^2-1)(n^2+11)/45, with a direct
/// floating cross-check and the corollary zeta_n(4) = (n^2-1)(n^2+11)/720.
inline Sin4Result sin4_sum(std::int64_t n) {
    if (n < 2) throw precondition_error("sin4_sum: n must be >= 2");
    const detail::int128 nn = static_cast<detail::int128>(n) * n;
    const Rational exact((nn - 1) * (nn + 11), 45);
    compensated_sum acc;
    const double pi_over_n = std::numbers::pi / static_cast<double>(n);
    for (std::int64_t k = 1; k < n; ++k) {
        const double s = std::sin(pi_over_n *
                                  static_cast<double>(std::min(k, n - k)));
        acc.add(1.0 / (s * s * s * s));
    }
    const double sum = acc.value();
    const double target = exact.to_double();
    if (std::abs(sum - target) > 1e-10 * target)
        throw crosscheck_error("sin4_sum: floating sum disagrees with "
                               "(n^2-1)(n^2+11)/45");
    const double z4 = zeta_eval(n, {4.0, 0.0}).value.real();
    if (std::abs(z4 - target / 16.0) > 1e-10 * (target / 16.0))
        throw crosscheck_error("sin4_sum: zeta_n(4) disagrees with "
                               "(n^2-1)(n^2+11)/720");
    return {exact, sum};
}

struct TraceMoment {
    double zeta_side;           // zeta_n(-2m)
    double combinatorial_side;  // n * binom(2m, m)
};

/// Trace moments zeta_n(-2m) = tr(L^m)/2 = n * sum_k binom(m,k)^2. The
/// identity aliases once the binomial expansion wraps modulo n, so n > 2m is
/// required (m = 2, n = 2 gives 16 vs 12).
inline TraceMoment trace_moment(std::int64_t n, int m) {
    if (m < 1) throw precondition_error("trace_moment: m must be >= 1");
    if (n <= 2 * m)
        throw precondition_error(
            "trace_moment: requires n > 2m (Fourier aliasing below that)");
    const double zeta_side =
        zeta_eval(n, {-2.0 * static_cast<double>(m), 0.0}).value.real();
    const double comb = static_cast<double>(n) *
                        static_cast<double>(binomial(2 * m, m));
    return {zeta_side, comb};
}

/// Real function sampled on the uniform grid j/m, j = 0..m-1.
struct GridFunction {
    std::vector<double> samples;

    std::int64_t size() const {
        return static_cast<std::int64_t>(samples.size());
    }
    /// Piecewise-linear interpolation at u in [0, 1); the last cell
    /// extrapolates the final segment.
    double interpolate(double u) const {
        const std::int64_t m = size();
        const double t = u * static_cast<double>(m);
        std::int64_t j = static_cast<std::int64_t>(t);
        if (j > m - 2) j = m - 2;
        const double frac = t - static_cast<double>(j);
        return samples[static_cast<std::size_t>(j)] * (1.0 - frac) +
               samples[static_cast<std::size_t>(j + 1)] * frac;
    }
};

namespace detail {

struct grid_moments {
    double mean;
    double sigma;
};

// Mean and standard deviation of the piecewise-linear extension of S over
// [0, 1). Exact for linear data, which pins the normalized linear functions
// +-(sqrt(12) x - sqrt(3)) as exact fixed points of the operator below.
inline grid_moments linear_extension_moments(const std::vector<double>& S) {
    const std::size_t m = S.size();
    std::vector<double> ext(S);
    ext.push_back(2.0 * S[m - 1] - S[m - 2]);  // extrapolated right endpoint
    compensated_sum mean_acc;
    for (std::size_t j = 0; j < m; ++j)
        mean_acc.add(0.5 * (ext[j] + ext[j + 1]));
    const double mean = mean_acc.value() / static_cast<double>(m);
    compensated_sum var_acc;
    for (std::size_t j = 0; j < m; ++j) {
        const double a = ext[j] - mean;
        const double b = ext[j + 1] - mean;
        var_acc.add((a * a + a * b + b * b) / 3.0);
    }
    const double var = var_acc.value() / static_cast<double>(m);
    return {mean, std::sqrt(std::max(var, 0.0))};
}

} // namespace detail

/// Central-limit operator T_n(g) = (S_n(g) - E[S_n]) / sigma(S_n) with
/// S_n(g)(y) = sum_{k=1}^{n-1} g((k+y)/n), evaluated on g's own grid.
/// Output is normalized to mean 0 and variance 1 in the piecewise-linear
/// integral sense.
inline GridFunction central_limit_operator(const GridFunction& g,
                                           std::int64_t n) {
    const std::int64_t m = g.size();
    if (m < 2) throw precondition_error("central_limit_operator: grid too small");
    if (n < 2) throw precondition_error("central_limit_operator: n must be >= 2");
    std::vector<double> S(static_cast<std::size_t>(m), 0.0);
    const double inv_n = 1.0 / static_cast<double>(n);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::int64_t j = 0; j < m; ++j) {
        const double y = static_cast<double>(j) * inv_m;
        compensated_sum acc;
        for (std::int64_t k = 1; k < n; ++k)
            acc.add(g.interpolate((static_cast<double>(k) + y) * inv_n));
        S[static_cast<std::size_t>(j)] = acc.value();
    }
    const auto mom = detail::linear_extension_moments(S);
    if (!(mom.sigma > 1e-12))
        throw degenerate_error(
            "central_limit_operator: S_n is constant (sigma <= 1e-12)");
    GridFunction out;
    out.samples.resize(S.size());
    for (std::size_t j = 0; j < S.size(); ++j)
        out.samples[j] = (S[j] - mom.mean) / mom.sigma;
    return out;
}

} // namespace zetalab

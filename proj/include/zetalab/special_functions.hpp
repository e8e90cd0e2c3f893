#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "zetalab/errors.hpp"
#include "zetalab/summation.hpp"

namespace zetalab {

namespace detail {

// 14-term Lanczos coefficients, g + 1/2 = 5.2421875. Good to ~5e-14 relative
// over |z| <= 50 away from the poles (checked against a Weierstrass-product
// oracle in the test suite).
inline constexpr std::array<double, 14> lanczos_cof = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    0.339946499848118887e-4,  0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3,
    -0.210264441724104883e-3, 0.217439618115212643e-3,
    -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};

inline constexpr double lanczos_ser0 = 0.999999999999997092;
inline constexpr double sqrt_two_pi = 2.5066282746310005;

// log Gamma(z) for Re(z) >= 0.5.
inline std::complex<double> log_gamma_half_plane(std::complex<double> z) {
    std::complex<double> tmp = z + 5.2421875;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    std::complex<double> ser = lanczos_ser0;
    std::complex<double> y = z;
    for (const double c : lanczos_cof) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(sqrt_two_pi * ser / z);
}

inline bool is_nonpositive_integer(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

} // namespace detail

/// Gamma(z) by the fixed-coefficient Lanczos sum, with the reflection
/// formula for Re(z) < 1/2. Relative accuracy ~1e-13 for |z| <= 50.
inline std::complex<double> complex_gamma(std::complex<double> z) {
    if (detail::is_nonpositive_integer(z))
        throw pole_error("complex_gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::numbers::pi /
               (std::sin(std::numbers::pi * z) *
                std::exp(detail::log_gamma_half_plane(1.0 - z)));
    }
    return std::exp(detail::log_gamma_half_plane(z));
}

/// 1/Gamma(z), entire: zero at the poles of Gamma instead of a signal.
inline std::complex<double> reciprocal_gamma(std::complex<double> z) {
    if (detail::is_nonpositive_integer(z)) return {0.0, 0.0};
    if (z.real() < 0.5) {
        return std::sin(std::numbers::pi * z) *
               std::exp(detail::log_gamma_half_plane(1.0 - z)) /
               std::numbers::pi;
    }
    return std::exp(-detail::log_gamma_half_plane(z));
}

/// Limit density c(s) = integral_0^1 (2 sin pi x)^(-s) dx
///                    = 2^(-s) Gamma((1-s)/2) / (sqrt(pi) Gamma(1 - s/2)).
/// Poles at s = 1, 3, 5, ...; zeros at s = 2, 4, 6, ...
inline std::complex<double> c_of_s(std::complex<double> s) {
    if (detail::is_nonpositive_integer((1.0 - s) / 2.0))
        throw pole_error("c_of_s: pole at odd positive integer s");
    const std::complex<double> num = complex_gamma((1.0 - s) / 2.0);
    return std::exp(-s * std::numbers::ln2) * num *
           reciprocal_gamma(1.0 - s / 2.0) / std::sqrt(std::numbers::pi);
}

/// Reference Riemann zeta for Re(s) > 1: Dirichlet partial sum to N plus the
/// Euler-Maclaurin tail through the B_4 term. With N = 10^4 this is good to
/// ~1e-13 relative for Re(s) >= 1.1, |Im(s)| <= 60.
inline std::complex<double> riemann_zeta_ref(std::complex<double> s,
                                             int terms = 10000) {
    if (!(s.real() > 1.0))
        throw precondition_error("riemann_zeta_ref: requires Re(s) > 1");
    compensated_sum re, im;
    for (int k = 1; k <= terms; ++k) {
        const std::complex<double> t =
            std::exp(-s * std::log(static_cast<double>(k)));
        re.add(t.real());
        im.add(t.imag());
    }
    const double N = static_cast<double>(terms);
    const std::complex<double> ip = std::exp((1.0 - s) * std::log(N)) / (s - 1.0);
    const std::complex<double> nms = std::exp(-s * std::log(N));
    std::complex<double> tail = ip - 0.5 * nms;
    tail += s / 12.0 * nms / N;                                  // B_2 term
    tail -= s * (s + 1.0) * (s + 2.0) / 720.0 * nms / (N * N * N);  // B_4 term
    return std::complex<double>(re.value(), im.value()) + tail;
}

} // namespace zetalab

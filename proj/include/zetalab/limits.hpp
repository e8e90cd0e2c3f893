#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>

#include "zetalab/errors.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

/// One row of a scaling experiment.
struct ConvergenceRow {
    std::int64_t n;
    std::complex<double> s;
    std::complex<double> raw;        // zeta_n(s)
    std::complex<double> scaled;
    std::complex<double> reference;  // limit target, valid iff has_reference
    bool has_reference;
    double deviation;  // |scaled - reference| when present, else NaN
};

namespace detail {

inline ConvergenceRow make_row(std::int64_t n, std::complex<double> s,
                               std::complex<double> raw,
                               std::complex<double> scaled) {
    return {n, s, raw, scaled, {0.0, 0.0}, false,
            std::numeric_limits<double>::quiet_NaN()};
}

inline void set_reference(ConvergenceRow& row, std::complex<double> ref) {
    row.reference = ref;
    row.has_reference = true;
    row.deviation = std::abs(row.scaled - ref);
}

} // namespace detail

/// Right of the critical strip: zeta_n(s) (2 pi)^s / (2 n^s) -> zeta(s).
/// The constant (2 pi)^s / 2 is the one that maps the exact zeta_n(2) =
/// (n^2-1)/12 onto (pi^2/6)(1 - 1/n^2).
inline ConvergenceRow scaled_zeta_right(std::int64_t n,
                                        std::complex<double> s) {
    if (!(s.real() > 1.0))
        throw precondition_error("scaled_zeta_right: requires Re(s) > 1");
    const std::complex<double> raw = zeta_eval(n, s).value;
    const std::complex<double> factor =
        std::exp(s * (std::log(2.0 * std::numbers::pi) -
                      std::log(static_cast<double>(n)))) / 2.0;
    ConvergenceRow row = detail::make_row(n, s, raw, raw * factor);
    detail::set_reference(row, riemann_zeta_ref(s));
    return row;
}

/// At and below the lower strip edge: zeta_n(s)/n -> c(s).
inline ConvergenceRow scaled_zeta_left(std::int64_t n, std::complex<double> s) {
    if (!(s.real() <= 0.0))
        throw precondition_error("scaled_zeta_left: requires Re(s) <= 0");
    const std::complex<double> raw = zeta_eval(n, s).value;
    ConvergenceRow row =
        detail::make_row(n, s, raw, raw / static_cast<double>(n));
    detail::set_reference(row, c_of_s(s));
    return row;
}

/// Open critical strip: chi_n(s) = (zeta_n(s) - n c(s)) / n^s. The limit has
/// no closed form here, so the deviation column is the Cauchy-style doubling
/// difference |chi_{2n}(s) - chi_n(s)|.
inline ConvergenceRow chi(std::int64_t n, std::complex<double> s) {
    if (!(s.real() > 0.0 && s.real() < 1.0))
        throw precondition_error("chi: requires 0 < Re(s) < 1");
    const std::complex<double> cs = c_of_s(s);
    auto chi_at = [&](std::int64_t m) {
        const std::complex<double> raw = zeta_eval(m, s).value;
        return (raw - static_cast<double>(m) * cs) /
               std::exp(s * std::log(static_cast<double>(m)));
    };
    const std::complex<double> raw = zeta_eval(n, s).value;
    ConvergenceRow row = detail::make_row(
        n, s, raw,
        (raw - static_cast<double>(n) * cs) /
            std::exp(s * std::log(static_cast<double>(n))));
    row.deviation = std::abs(chi_at(2 * n) - row.scaled);
    return row;
}

/// chi_n(s) without the strip guard, for plotting grids that extend past the
/// strip (convergence is only claimed inside it). Still rejects the poles of
/// c(s) at odd positive integers.
inline std::complex<double> chi_extended(std::int64_t n,
                                         std::complex<double> s) {
    const std::complex<double> cs = c_of_s(s);
    const std::complex<double> raw = zeta_eval(n, s).value;
    return (raw - static_cast<double>(n) * cs) /
           std::exp(s * std::log(static_cast<double>(n)));
}

/// Critical line: zeta_n(1 + i tau) / (n ln n). The tau = 0 reference 1/pi
/// is the asymptotic limit of the two-ends expansion; finite n sits above it
/// by ~ (gamma + ln 2 - ln pi)/(pi ln n).
inline ConvergenceRow critical_line_growth(std::int64_t n, double tau) {
    if (n < 10)
        throw precondition_error("critical_line_growth: n must be >= 10");
    const std::complex<double> s{1.0, tau};
    const std::complex<double> raw = zeta_eval(n, s).value;
    ConvergenceRow row = detail::make_row(
        n, s, raw,
        raw / (static_cast<double>(n) * std::log(static_cast<double>(n))));
    if (tau == 0.0)
        detail::set_reference(row, {1.0 / std::numbers::pi, 0.0});
    return row;
}

} // namespace zetalab

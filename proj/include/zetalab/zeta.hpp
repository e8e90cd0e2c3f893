#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/spectra.hpp"
#include "zetalab/summation.hpp"

namespace zetalab {

struct ZetaEvaluation {
    std::int64_t n;
    std::complex<double> s;
    std::complex<double> value;
    std::complex<double> derivative;  // valid iff has_derivative
    bool has_derivative;
    double term_scale;  // sum of term magnitudes = zeta_n(Re s)
};

/// Evaluates zeta_n(s) = sum_{k=1}^{n-1} (2 sin(pi k/n))^{-s} repeatedly for
/// one n, caching log(lambda_k) for the folded index range k = 1..floor((n-1)/2).
///
/// Folding k <-> n-k halves the work and makes the palindrome symmetry exact;
/// the k = n/2 middle term (lambda = 2) is added once when n is even. Terms are
/// accumulated in fixed-size blocks with Neumaier compensation and the block
/// partials are combined by a fixed pairwise tree, so results are bit-identical
/// for every worker count.
class zeta_evaluator {
public:
    explicit zeta_evaluator(std::int64_t n) : n_(n) {
        if (n < 2) throw precondition_error("zeta_evaluator: n must be >= 2");
        const std::int64_t folded = (n - 1) / 2;
        log_lambda_.resize(static_cast<std::size_t>(folded));
        const double pi_over_n = std::numbers::pi / static_cast<double>(n);
        const std::size_t blocks =
            (log_lambda_.size() + block_size - 1) / block_size;
        for_each_block(blocks, [&](std::size_t b) {
            const std::size_t lo = b * block_size;
            const std::size_t hi = std::min(lo + block_size, log_lambda_.size());
            for (std::size_t i = lo; i < hi; ++i) {
                const double k = static_cast<double>(i + 1);
                log_lambda_[i] = std::log(2.0 * std::sin(pi_over_n * k));
            }
        });
    }

    std::int64_t n() const { return n_; }

    ZetaEvaluation operator()(std::complex<double> s,
                              bool want_derivative = false) const {
        const double sigma = s.real();
        const double tau = s.imag();
        const std::size_t count = log_lambda_.size();
        const std::size_t blocks = (count + block_size - 1) / block_size;
        // one extra slot for the middle term of even n
        const std::size_t slots = blocks + 1;
        std::vector<double> vre(slots, 0.0), vim(slots, 0.0), sc(slots, 0.0);
        std::vector<double> dre, dim;
        if (want_derivative) {
            dre.assign(slots, 0.0);
            dim.assign(slots, 0.0);
        }
        for_each_block(blocks, [&](std::size_t b) {
            const std::size_t lo = b * block_size;
            const std::size_t hi = std::min(lo + block_size, count);
            compensated_sum are, aim, asc, adre, adim;
            for (std::size_t i = lo; i < hi; ++i) {
                const double L = log_lambda_[i];
                const double mag = 2.0 * std::exp(-sigma * L);  // folded pair
                const double ang = -tau * L;
                const double tre = mag * std::cos(ang);
                const double tim = mag * std::sin(ang);
                are.add(tre);
                aim.add(tim);
                asc.add(mag);
                if (want_derivative) {
                    adre.add(-L * tre);
                    adim.add(-L * tim);
                }
            }
            vre[b] = are.value();
            vim[b] = aim.value();
            sc[b] = asc.value();
            if (want_derivative) {
                dre[b] = adre.value();
                dim[b] = adim.value();
            }
        });
        if (n_ % 2 == 0) {
            // middle term: lambda = 2 sin(pi/2) = 2
            const double L = std::numbers::ln2;
            const double mag = std::exp(-sigma * L);
            const double ang = -tau * L;
            vre[blocks] = mag * std::cos(ang);
            vim[blocks] = mag * std::sin(ang);
            sc[blocks] = mag;
            if (want_derivative) {
                dre[blocks] = -L * vre[blocks];
                dim[blocks] = -L * vim[blocks];
            }
        }
        ZetaEvaluation out;
        out.n = n_;
        out.s = s;
        out.value = {pairwise_reduce(vre), pairwise_reduce(vim)};
        out.term_scale = pairwise_reduce(sc);
        out.has_derivative = want_derivative;
        out.derivative = want_derivative
                             ? std::complex<double>{pairwise_reduce(dre),
                                                    pairwise_reduce(dim)}
                             : std::complex<double>{0.0, 0.0};
        return out;
    }

private:
    static constexpr std::size_t block_size = 8192;
    std::int64_t n_;
    std::vector<double> log_lambda_;
};

inline ZetaEvaluation zeta_eval(std::int64_t n, std::complex<double> s,
                                bool want_derivative = false) {
    return zeta_evaluator(n)(s, want_derivative);
}

/// Shifted zeta  zeta_n(y, s) = sum_{k=1}^{n-1} (2 sin(pi (k+y)/n))^{-s}.
/// All bases are positive reals, so only principal powers occur. y = 0 takes
/// the folded zeta_eval path (same floating computation, exact coincidence).
inline std::complex<double> shifted_zeta(std::int64_t n, double y,
                                         std::complex<double> s) {
    if (n < 2) throw precondition_error("shifted_zeta: n must be >= 2");
    if (!(y >= 0.0 && y < 1.0))
        throw precondition_error("shifted_zeta: y must lie in [0, 1)");
    if (y == 0.0) return zeta_eval(n, s).value;
    const double sigma = s.real();
    const double tau = s.imag();
    const double pi_over_n = std::numbers::pi / static_cast<double>(n);
    compensated_sum re, im;
    for (std::int64_t k = 1; k < n; ++k) {
        const double L =
            std::log(2.0 * std::sin(pi_over_n * (static_cast<double>(k) + y)));
        const double mag = std::exp(-sigma * L);
        const double ang = -tau * L;
        re.add(mag * std::cos(ang));
        im.add(mag * std::sin(ang));
    }
    return {re.value(), im.value()};
}

/// d/dy of the shifted zeta, by the chain rule on 2 sin(pi (k+y)/n).
/// At y = 0 the k <-> n-k terms cancel exactly (cos flips sign, sin does
/// not), so the value is identically zero there.
inline std::complex<double> shifted_zeta_dy(std::int64_t n, double y,
                                            std::complex<double> s) {
    if (n < 2) throw precondition_error("shifted_zeta_dy: n must be >= 2");
    if (y == 0.0) return {0.0, 0.0};
    const double pi_over_n = std::numbers::pi / static_cast<double>(n);
    compensated_sum re, im;
    for (std::int64_t k = 1; k < n; ++k) {
        const double u = pi_over_n * (static_cast<double>(k) + y);
        const double L = std::log(2.0 * std::sin(u));
        // d/dy (2 sin u)^{-s} = -s (2 sin u)^{-s-1} * 2 cos(u) * pi/n
        const std::complex<double> t =
            -s * std::exp(-(s + 1.0) * L) * (2.0 * std::cos(u) * pi_over_n);
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.value(), im.value()};
}

struct RootMotionField {
    std::complex<double> value;  // -ds_z / dy_z
    std::complex<double> ds;     // d/ds of z_n(s, y) = zeta_n(s) + zeta_n(y, s)
    std::complex<double> dy;     // d/dy of z_n(s, y)
};

/// Root-motion field F_n(s) = -d_s z / d_y z with z_n(s,y) = zeta_n(s) +
/// zeta_n(y, s), both partials analytic. At y = 0 the y-derivative cancels
/// exactly under k <-> n-k, so the field degenerates there; y may be given
/// to probe the interior of the homotopy.
inline RootMotionField root_motion_field(std::int64_t n, std::complex<double> s,
                                         double y = 0.0) {
    const ZetaEvaluation base = zeta_eval(n, s, true);
    std::complex<double> ds, dy;
    if (y == 0.0) {
        ds = 2.0 * base.derivative;
        dy = {0.0, 0.0};  // exact pairwise cancellation of cos(pi k/n) terms
    } else {
        // d/ds of a shifted term is -log(2 sin(pi (k+y)/n)) times the term
        const double pi_over_n = std::numbers::pi / static_cast<double>(n);
        compensated_sum re, im;
        for (std::int64_t k = 1; k < n; ++k) {
            const double L = std::log(
                2.0 * std::sin(pi_over_n * (static_cast<double>(k) + y)));
            const std::complex<double> t = -L * std::exp(-s * L);
            re.add(t.real());
            im.add(t.imag());
        }
        ds = base.derivative + std::complex<double>{re.value(), im.value()};
        dy = shifted_zeta_dy(n, y, s);
    }
    if (std::abs(dy) < 1e-13 * base.term_scale)
        throw degenerate_error(
            "root_motion_field: y-derivative of z_n vanishes (|d_y z| below "
            "1e-13 of term scale)");
    return {-ds / dy, ds, dy};
}

} // namespace zetalab

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

enum class GraphFamily { circular, complete, star };

struct SpectrumDescriptor {
    GraphFamily family;
    std::int64_t n;
};

/// lambda_k = 2 sin(pi k / n). Evaluated through min(k, n-k) so the
/// palindrome lambda_k == lambda_{n-k} holds bit for bit and the argument
/// stays in (0, pi/2] where sin is best conditioned.
inline double circular_eigenvalue(std::int64_t n, std::int64_t k) {
    const std::int64_t m = std::min(k, n - k);
    return 2.0 * std::sin(std::numbers::pi * static_cast<double>(m) /
                          static_cast<double>(n));
}

/// Positive Dirac eigenvalues of the circular graph C_n, one per k = 1..n-1.
inline std::vector<double> circular_positive_spectrum(std::int64_t n) {
    if (n < 2) throw precondition_error("circular_positive_spectrum: n must be >= 2");
    std::vector<double> lam(static_cast<std::size_t>(n - 1));
    for (std::int64_t k = 1; k < n; ++k)
        lam[static_cast<std::size_t>(k - 1)] = circular_eigenvalue(n, k);
    return lam;
}

/// Enumerated positive spectrum for the families where that is feasible.
/// The complete graph's 2^(2^(n-1)-1)-fold eigenvalue is not enumerable;
/// use ClosedFormZeta for it.
inline std::vector<double> positive_spectrum(const SpectrumDescriptor& d) {
    switch (d.family) {
        case GraphFamily::circular:
            return circular_positive_spectrum(d.n);
        case GraphFamily::star: {
            if (d.n < 2)
                throw precondition_error("positive_spectrum: n must be >= 2");
            std::vector<double> lam(static_cast<std::size_t>(d.n), 1.0);
            lam.back() = std::sqrt(static_cast<double>(d.n));
            return lam;
        }
        case GraphFamily::complete:
            throw precondition_error(
                "positive_spectrum: complete-graph multiplicities are not "
                "enumerable; use ClosedFormZeta");
    }
    throw precondition_error("positive_spectrum: unknown family");
}

/// Closed-form zeta descriptors for the two families whose spectra collapse
/// to one or two distinct eigenvalues.
struct ClosedFormZeta {
    enum class Kind { complete_graph, star_graph };
    Kind kind;
    std::int64_t n;
    // Complete graph: eigenvalue sqrt(n) occurs 2^log_multiplicity times.
    // The exponent is stored; the count itself is astronomically large.
    std::int64_t log_multiplicity;

    static ClosedFormZeta complete(std::int64_t n) {
        if (n < 2) throw precondition_error("ClosedFormZeta::complete: n must be >= 2");
        if (n > 64)
            throw precondition_error(
                "ClosedFormZeta::complete: exponent 2^(n-1)-1 overflows for n > 64");
        // 2^(n-1) - 1; for n == 64 this is exactly INT64_MAX.
        const std::int64_t e =
            (n == 64) ? INT64_MAX : ((std::int64_t{1} << (n - 1)) - 1);
        return {Kind::complete_graph, n, e};
    }
    static ClosedFormZeta star(std::int64_t n) {
        if (n < 2) throw precondition_error("ClosedFormZeta::star: n must be >= 2");
        return {Kind::star_graph, n, 0};
    }
};

/// Value of a closed-form zeta, carried in log space so the complete-graph
/// multiplicity never has to be expanded.
struct ClosedFormValue {
    std::complex<double> log_value;  // principal log of the value
    std::complex<double> value;      // expanded value, valid iff representable
    bool representable;
};

/// Complete: 2^(2^(n-1)-1) * n^(-s/2).  Star: (n-1) + n^(-s/2).
inline ClosedFormValue closed_form_zeta_eval(const ClosedFormZeta& d,
                                             std::complex<double> s) {
    const double ln_n = std::log(static_cast<double>(d.n));
    const std::complex<double> w = std::exp(-s / 2.0 * ln_n);  // n^(-s/2)
    if (d.kind == ClosedFormZeta::Kind::complete_graph) {
        const std::complex<double> lg =
            std::complex<double>(static_cast<double>(d.log_multiplicity) *
                                 std::numbers::ln2, 0.0) - s / 2.0 * ln_n;
        ClosedFormValue out{lg, {0.0, 0.0}, false};
        if (lg.real() < 709.0) {  // exp stays inside double range
            out.value = std::exp2(static_cast<double>(d.log_multiplicity)) * w;
            out.representable = std::isfinite(out.value.real()) &&
                                std::isfinite(out.value.imag());
        }
        return out;
    }
    const std::complex<double> v = static_cast<double>(d.n - 1) + w;
    ClosedFormValue out{std::log(v), v, true};
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        out.representable = false;
        // |w| dominates (n-1), so log(v) ~ log(w) + log1p((n-1)/w)
        const std::complex<double> lw = -s / 2.0 * ln_n;
        out.log_value = lw + std::log(1.0 + static_cast<double>(d.n - 1) *
                                                std::exp(-lw));
    }
    return out;
}

/// Root of the star-graph zeta (n-1) + n^(-s/2) = 0, reading the paper's
/// log(1-n) through the principal branch: s = -2 (ln(n-1) + i pi) / ln n.
inline std::complex<double> star_root(std::int64_t n) {
    if (n < 3) throw precondition_error("star_root: n must be >= 3");
    const double ln_n = std::log(static_cast<double>(n));
    return {-2.0 * std::log(static_cast<double>(n - 1)) / ln_n,
            -2.0 * std::numbers::pi / ln_n};
}

} // namespace zetalab

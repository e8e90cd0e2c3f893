#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/summation.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

struct RootRecord {
    std::int64_t n;
    std::complex<double> location;
    double residual;  // |zeta_n| / term_scale at the located root
    int iterations;
    std::complex<double> seed;
};

struct RectangleContour {
    double sigma_min, sigma_max, tau_min, tau_max;

    bool degenerate() const {
        return !(sigma_min < sigma_max) || !(tau_min < tau_max);
    }
    bool contains(std::complex<double> z) const {
        return z.real() >= sigma_min && z.real() <= sigma_max &&
               z.imag() >= tau_min && z.imag() <= tau_max;
    }
};

/// Newton iteration s <- s - zeta_n(s)/zeta_n'(s), stopping on relative
/// residual < tol or step < 1e-13.
inline RootRecord newton_root(const zeta_evaluator& ev,
                              std::complex<double> seed, double tol = 1e-12,
                              int max_iter = 80) {
    if (!(tol > 0.0)) throw precondition_error("newton_root: tol must be > 0");
    if (max_iter < 1) throw precondition_error("newton_root: max_iter must be >= 1");
    std::complex<double> s = seed;
    for (int it = 1; it <= max_iter; ++it) {
        const ZetaEvaluation e = ev(s, true);
        const double residual = std::abs(e.value) / e.term_scale;
        if (residual < tol)
            return {ev.n(), s, residual, it - 1, seed};
        if (std::abs(e.derivative) < 1e-300)
            throw degenerate_error("newton_root: derivative underflow at n = " +
                                   std::to_string(ev.n()));
        const std::complex<double> step = e.value / e.derivative;
        s -= step;
        if (std::abs(step) < 1e-13) {
            const ZetaEvaluation f = ev(s);
            return {ev.n(), s, std::abs(f.value) / f.term_scale, it, seed};
        }
    }
    throw convergence_error("newton_root: max_iter exhausted at n = " +
                            std::to_string(ev.n()));
}

inline RootRecord newton_root(std::int64_t n, std::complex<double> seed,
                              double tol = 1e-12, int max_iter = 80) {
    return newton_root(zeta_evaluator(n), seed, tol, max_iter);
}

struct ScanResult {
    std::vector<RootRecord> roots;  // deduplicated, sorted by (tau, sigma)
    std::int64_t seeds = 0;
    std::int64_t failures = 0;  // seeds whose Newton run did not converge
};

/// Launches newton_root from every node of a uniform grid over the window,
/// keeps converged roots inside it, deduplicates at radius 1e-8 and sorts by
/// (tau, sigma). Per-seed failures are dropped and only counted.
inline ScanResult scan_window(const zeta_evaluator& ev,
                              const RectangleContour& window, double grid_step,
                              double tol = 1e-12) {
    if (window.degenerate())
        throw precondition_error("scan_window: degenerate window");
    if (!(grid_step > 0.0))
        throw precondition_error("scan_window: grid_step must be > 0");
    std::vector<std::complex<double>> seeds;
    for (double sig = window.sigma_min; sig <= window.sigma_max + 1e-12;
         sig += grid_step)
        for (double tau = window.tau_min; tau <= window.tau_max + 1e-12;
             tau += grid_step)
            seeds.emplace_back(sig, tau);

    std::vector<RootRecord> found(seeds.size());
    std::vector<char> ok(seeds.size(), 0);
    for_each_block(seeds.size(), [&](std::size_t i) {
        try {
            RootRecord r = newton_root(ev, seeds[i], tol);
            if (window.contains(r.location)) {
                found[i] = r;
                ok[i] = 1;
            }
        } catch (const error&) {
            // non-convergence from this seed: dropped, counted below
        }
    });

    ScanResult out;
    out.seeds = static_cast<std::int64_t>(seeds.size());
    std::vector<RootRecord> kept;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (ok[i])
            kept.push_back(found[i]);
        else
            ++out.failures;
    }
    std::sort(kept.begin(), kept.end(), [](const RootRecord& a,
                                           const RootRecord& b) {
        if (a.location.imag() != b.location.imag())
            return a.location.imag() < b.location.imag();
        return a.location.real() < b.location.real();
    });
    for (const RootRecord& r : kept) {
        bool dup = false;
        for (const RootRecord& q : out.roots)
            if (std::abs(q.location - r.location) < 1e-8) {
                dup = true;
                break;
            }
        if (!dup) out.roots.push_back(r);
    }
    return out;
}

inline ScanResult scan_window(std::int64_t n, const RectangleContour& window,
                              double grid_step, double tol = 1e-12) {
    return scan_window(zeta_evaluator(n), window, grid_step, tol);
}

/// Argument-principle count (1/2 pi i) contour-integral of zeta'/zeta around
/// the rectangle, by per-edge quadrature at midpoint-offset nodes. The
/// per-edge sample count doubles until the raw integral sits within 0.05 of
/// an integer; the total budget is 2^20 samples.
inline int contour_count(const zeta_evaluator& ev, const RectangleContour& rect,
                         int samples_per_edge = 64) {
    if (rect.degenerate())
        throw precondition_error("contour_count: degenerate rectangle");
    if (samples_per_edge < 64)
        throw precondition_error("contour_count: samples_per_edge must be >= 64");
    const std::complex<double> corners[4] = {
        {rect.sigma_min, rect.tau_min},
        {rect.sigma_max, rect.tau_min},
        {rect.sigma_max, rect.tau_max},
        {rect.sigma_min, rect.tau_max}};
    for (int m = samples_per_edge; 4LL * m <= (1 << 20); m *= 2) {
        compensated_sum ire, iim;
        double min_rel = std::numeric_limits<double>::infinity();
        for (int edge = 0; edge < 4; ++edge) {
            const std::complex<double> a = corners[edge];
            const std::complex<double> d =
                (corners[(edge + 1) % 4] - a) / static_cast<double>(m);
            for (int j = 0; j < m; ++j) {
                const std::complex<double> z = a + (j + 0.5) * d;
                const ZetaEvaluation e = ev(z, true);
                min_rel = std::min(min_rel, std::abs(e.value) / e.term_scale);
                const std::complex<double> t = e.derivative / e.value * d;
                ire.add(t.real());
                iim.add(t.imag());
            }
        }
        if (min_rel < 1e-8)
            throw degenerate_error(
                "contour_count: contour passes within the root-proximity "
                "floor (min |zeta|/scale < 1e-8)");
        const std::complex<double> winding =
            std::complex<double>(ire.value(), iim.value()) /
            (2.0 * std::numbers::pi * std::complex<double>(0.0, 1.0));
        const double nearest = std::round(winding.real());
        if (std::abs(winding - nearest) < 0.05) return static_cast<int>(nearest);
    }
    throw convergence_error(
        "contour_count: integral not within 0.05 of an integer after 2^20 "
        "samples");
}

inline int contour_count(std::int64_t n, const RectangleContour& rect,
                         int samples_per_edge = 64) {
    return contour_count(zeta_evaluator(n), rect, samples_per_edge);
}

/// Runs newton_root along a strictly increasing n-schedule, seeding each run
/// with the previous root.
inline std::vector<RootRecord> track_roots(
    const std::vector<std::int64_t>& n_schedule, std::complex<double> seed,
    double tol = 1e-12) {
    if (n_schedule.empty())
        throw precondition_error("track_roots: empty schedule");
    for (std::size_t i = 1; i < n_schedule.size(); ++i)
        if (n_schedule[i] <= n_schedule[i - 1])
            throw precondition_error("track_roots: schedule must be strictly "
                                     "increasing");
    std::vector<RootRecord> rows;
    rows.reserve(n_schedule.size());
    std::complex<double> s = seed;
    for (const std::int64_t n : n_schedule) {
        try {
            rows.push_back(newton_root(n, s, tol));
        } catch (const error& e) {
            throw convergence_error("track_roots: failure at n = " +
                                    std::to_string(n) + ": " + e.what());
        }
        s = rows.back().location;
    }
    return rows;
}

} // namespace zetalab

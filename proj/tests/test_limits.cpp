#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "zetalab/limits.hpp"

using namespace zetalab;
using std::complex;

TEST_CASE("right regime: scaling constant reproduces the Basel limit") {
    const double pi = std::numbers::pi;
    for (const std::int64_t n : {4, 8, 16, 32}) {
        const auto row = scaled_zeta_right(n, {2.0, 0.0});
        const double nn = static_cast<double>(n) * static_cast<double>(n);
        // scaled value is exactly (pi^2/6)(1 - 1/n^2)
        CHECK(std::abs(row.scaled.real() - pi * pi / 6.0 * (1.0 - 1.0 / nn)) <=
              1e-13 * row.scaled.real());
        // so the deviation against zeta(2) is pi^2/(6 n^2)
        REQUIRE(row.has_reference);
        CHECK(std::abs(row.deviation - pi * pi / (6.0 * nn)) <=
              1e-12 * (pi * pi / (6.0 * nn)));
    }
}

TEST_CASE("right regime: s = 3 and s = 4 targets") {
    // desk-scale n = 10^6 stand-in for the n = 10^7 acceptance run
    const auto r3 = scaled_zeta_right(1000000, {3.0, 0.0});
    const double want3 = r3.raw.real() / 1e18;
    CHECK(std::abs(want3 - 2.0 * 1.2020569031595943 /
                               std::pow(2.0 * std::numbers::pi, 3.0)) < 1e-6);
    CHECK(r3.deviation < 1e-6);

    const auto r4 = scaled_zeta_right(10000, {4.0, 0.0});
    const double pi4 = std::pow(std::numbers::pi, 4.0);
    CHECK(std::abs(r4.scaled.real() - pi4 / 90.0) < 1e-6);

    CHECK_THROWS_AS(scaled_zeta_right(100, {1.0, 0.0}), precondition_error);
    CHECK_THROWS_AS(scaled_zeta_right(100, {0.5, 2.0}), precondition_error);
}

TEST_CASE("left regime") {
    SECTION("s = -1: exact cotangent oracle and the 4/pi limit") {
        // sum 2 sin(pi k/n) telescopes to 2 cot(pi/(2n))
        for (const std::int64_t n : {10, 113, 1024}) {
            const auto row = scaled_zeta_left(n, {-1.0, 0.0});
            const double oracle =
                2.0 / std::tan(std::numbers::pi / (2.0 * static_cast<double>(n)));
            CHECK(std::abs(row.raw.real() - oracle) <= 1e-13 * oracle);
        }
        const auto big = scaled_zeta_left(100000, {-1.0, 0.0});
        CHECK(big.deviation <= 1e-4);
        CHECK(std::abs(big.reference.real() - 4.0 / std::numbers::pi) < 1e-14);
    }

    SECTION("s = 0 and s = -2 are exact algebra") {
        const auto z0 = scaled_zeta_left(1000, {0.0, 0.0});
        CHECK(z0.scaled.real() == Catch::Approx(999.0 / 1000.0).epsilon(1e-15));
        CHECK(std::abs(z0.reference.real() - 1.0) < 1e-14);

        const auto z2 = scaled_zeta_left(100000, {-2.0, 0.0});
        CHECK(std::abs(z2.scaled.real() - 2.0) <= 1e-12);
        CHECK(std::abs(z2.reference.real() - 2.0) <= 1e-13);
        CHECK(z2.deviation <= 1e-12);
    }

    CHECK_THROWS_AS(scaled_zeta_left(100, {0.1, 0.0}), precondition_error);
}

TEST_CASE("strip regime (chi)") {
    SECTION("doubling differences contract at s = 1/2") {
        double prev = -1.0;
        for (std::int64_t n = 1000; n <= 64000; n *= 2) {
            const auto row = chi(n, {0.5, 0.0});
            CHECK(std::abs(row.scaled) > 0.01);
            CHECK_FALSE(row.has_reference);
            if (prev > 0.0) CHECK(row.deviation < prev);
            prev = row.deviation;
        }
    }

    SECTION("conjugate symmetry") {
        const auto a = chi(5000, {0.3, 2.0});
        const auto b = chi(5000, {0.3, -2.0});
        CHECK(std::abs(b.scaled - std::conj(a.scaled)) <=
              1e-13 * std::abs(a.scaled));
    }

    SECTION("strict strip guard") {
        CHECK_THROWS_AS(chi(100, {0.0, 1.0}), precondition_error);
        CHECK_THROWS_AS(chi(100, {1.0, 1.0}), precondition_error);
        CHECK_THROWS_AS(chi(100, {-0.3, 0.0}), precondition_error);
        CHECK_THROWS_AS(chi(100, {1.7, 0.0}), precondition_error);
        CHECK_NOTHROW(chi(100, {0.5, 10.0}));
    }
}

TEST_CASE("critical line growth") {
    SECTION("tau = 0 band and monotone decrease") {
        const auto a = critical_line_growth(10000, 0.0);
        const auto b = critical_line_growth(100000, 0.0);
        CHECK(a.scaled.real() > b.scaled.real());
        CHECK(b.scaled.real() > 1.0 / std::numbers::pi);
        CHECK(a.scaled.imag() == 0.0);
        CHECK(a.scaled.real() > 0.0);
        REQUIRE(a.has_reference);
        CHECK(a.reference.real() ==
              Catch::Approx(1.0 / std::numbers::pi).epsilon(1e-15));
    }

    SECTION("modulus peaks at tau = 0") {
        const auto base = critical_line_growth(100000, 0.0);
        for (const double tau : {1.0, 5.0, 10.0}) {
            const auto row = critical_line_growth(100000, tau);
            CHECK(std::abs(row.scaled) <= base.scaled.real());
            CHECK_FALSE(row.has_reference);
        }
    }

    CHECK_THROWS_AS(critical_line_growth(5, 0.0), precondition_error);
}

TEST_CASE("regime guards are mutually exclusive on the boundaries") {
    // sigma = 0 belongs to the left regime only
    CHECK_NOTHROW(scaled_zeta_left(64, {0.0, 2.0}));
    CHECK_THROWS_AS(chi(64, {0.0, 2.0}), precondition_error);
    // sigma = 1 belongs to neither the strip nor the right regime
    CHECK_THROWS_AS(chi(64, {1.0, 2.0}), precondition_error);
    CHECK_THROWS_AS(scaled_zeta_right(64, {1.0, 2.0}), precondition_error);
    CHECK_THROWS_AS(scaled_zeta_left(64, {1.0, 2.0}), precondition_error);
}

TEST_CASE("deviation is nonincreasing along doubling schedules") {
    // allow 5% slack for small-n noise
    struct Case {
        complex<double> s;
        int regime;  // 0 right, 1 left, 2 chi
    };
    const Case cases[] = {{{2.5, 1.0}, 0}, {{-1.5, 0.5}, 1}, {{0.4, 3.0}, 2}};
    for (const auto& c : cases) {
        double prev = -1.0;
        for (std::int64_t n = 500; n <= 16000; n *= 2) {
            const ConvergenceRow row = c.regime == 0 ? scaled_zeta_right(n, c.s)
                                     : c.regime == 1 ? scaled_zeta_left(n, c.s)
                                                     : chi(n, c.s);
            if (prev >= 0.0) CHECK(row.deviation <= 1.05 * prev);
            prev = row.deviation;
        }
    }
}

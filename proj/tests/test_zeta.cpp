#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "tauber/zeta.hpp"

using namespace tauber;
using cdouble = std::complex<double>;

TEST_CASE("zeta on the real axis against independent oracles") {
    ZetaEvaluator z;

    // sandwich S_M + integral brackets, fully independent of Euler-Maclaurin
    EvalResult z2 = z.zeta({2.0, 0.0});
    oracles::Sandwich s2 = oracles::zeta_sandwich(2.0L);
    CHECK(z2.value.real() >= static_cast<double>(s2.lower) - 1e-10);
    CHECK(z2.value.real() <= static_cast<double>(s2.upper) + 1e-10);
    CHECK(z2.value.real() == doctest::Approx(1.6449340668482264).epsilon(1e-13));
    CHECK(z2.error_estimate < 1e-10);

    // alternating-series oracle below the abscissa of the raw series
    EvalResult zh = z.zeta({0.5, 0.0});
    CHECK(zh.value.real() ==
          doctest::Approx(static_cast<double>(oracles::eta_zeta(0.5L))).epsilon(1e-9));
    CHECK(zh.value.real() == doctest::Approx(-1.4603545088095868).epsilon(1e-6));

    for (double sigma : {0.6, 1.2, 2.5})
        CHECK(std::abs(z.zeta({sigma, 0.0}).value.real() -
                       static_cast<double>(oracles::eta_zeta(sigma))) < 1e-10);

    // pole residue probe via the limit: (s-1) zeta(s) -> 1
    double s = 1.0 + 1e-4;
    CHECK(std::abs((s - 1.0) * z.zeta({s, 0.0}).value.real() - 1.0) < 1e-3);
}

TEST_CASE("zeta prime against Richardson differences") {
    ZetaEvaluator z;
    EvalResult zp2 = z.zeta_prime({2.0, 0.0});
    CHECK(zp2.value.real() == doctest::Approx(-0.9375482543158438).epsilon(1e-10));
    CHECK(zp2.value.imag() == 0.0);  // real on the real axis
    CHECK(std::abs(zp2.value - oracles::richardson_zeta_prime(z, {2.0, 0.0})) < 1e-8);

    EvalResult zp3 = z.zeta_prime({3.0, 0.0});
    CHECK(zp3.value.real() == doctest::Approx(-0.19812624288563685).epsilon(1e-8));
    CHECK(std::abs(zp3.value - oracles::richardson_zeta_prime(z, {3.0, 0.0})) < 1e-8);

    // off-axis spot check against the oracle
    CHECK(std::abs(z.zeta_prime({1.5, 6.0}).value -
                   oracles::richardson_zeta_prime(z, {1.5, 6.0})) < 1e-7);
}

TEST_CASE("logarithmic derivative -zeta'/zeta") {
    ZetaEvaluator z;
    EvalResult ld2 = z.log_deriv({2.0, 0.0});
    CHECK(std::abs(ld2.value.real() - 0.5699609930945328) < 1e-8);
    CHECK(ld2.error_estimate < 1e-8);

    // bridge to the sieve-side Dirichlet sum at sigma where the tail is dust
    ArithmeticFunction lam = sieve_von_mangoldt(100000);
    for (double sigma : {4.0, 3.0}) {
        long double partial = oracles::naive_dirichlet(lam, sigma);
        CHECK(std::abs(z.log_deriv({sigma, 0.0}).value.real() -
                       static_cast<double>(partial)) < 1e-9);
    }

    // conjugate symmetry
    EvalResult up = z.log_deriv({1.5, 8.0});
    EvalResult dn = z.log_deriv({1.5, -8.0});
    CHECK(std::abs(up.value - std::conj(dn.value)) < 1e-12);
}

TEST_CASE("euler-maclaurin self-consistency under cutoff doubling") {
    ZetaEvaluator coarse(100, 4);
    ZetaEvaluator fine(200, 4);
    for (double sigma : {0.5, 1.5, 3.0}) {
        for (double t : {0.0, 10.0, 50.0}) {
            EvalResult a = coarse.zeta({sigma, t});
            EvalResult b = fine.zeta({sigma, t});
            CHECK(std::abs(a.value - b.value) <= a.error_estimate + 1e-14);
            EvalResult ap = coarse.zeta_prime({sigma, t});
            EvalResult bp = fine.zeta_prime({sigma, t});
            CHECK(std::abs(ap.value - bp.value) <= ap.error_estimate + 1e-14);
        }
    }
}

TEST_CASE("guards: pole, half-plane, constructor validation") {
    ZetaEvaluator z;
    CHECK_THROWS_AS(z.zeta({1.0 + 1e-9, 0.0}), NearPoleError);
    CHECK_THROWS_AS(z.zeta({-0.5, 3.0}), std::domain_error);
    CHECK_THROWS_AS(z.log_deriv({1.0, 1e-10}), NearPoleError);
    CHECK_THROWS_AS(ZetaEvaluator(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(ZetaEvaluator(100, 0), std::invalid_argument);
    CHECK_THROWS_AS(ZetaEvaluator(100, 9), std::invalid_argument);
}

TEST_CASE("residue probes by contour trapezoid") {
    // exact simple pole: control
    auto control = [](cdouble s) { return 1.0 / (s - 1.0); };
    cdouble pc = residue_probe(control, {1.0, 0.0}, 0.5, 64);
    CHECK(std::abs(pc - 1.0) < 1e-12);

    // zeta itself at s = 1
    ZetaEvaluator z;
    auto zf = [&z](cdouble s) { return z.zeta(ComplexPoint::of(s)).value; };
    CHECK(std::abs(residue_probe(zf, {1.0, 0.0}, 0.5, 64) - 1.0) < 1e-8);

    // the PNT chain: -zeta'(s+a)/((s+a) zeta(s+a)) at s = 1-a has residue 1
    for (double alpha : {1.5, 2.0}) {
        auto fn = [&z, alpha](cdouble s) {
            cdouble w = s + alpha;
            return z.log_deriv(ComplexPoint::of(w)).value / w;
        };
        cdouble p = residue_probe(fn, {1.0 - alpha, 0.0}, 0.25, 64);
        CHECK(std::abs(p - 1.0) < 1e-6);

        // stability across node counts
        cdouble p128 = residue_probe(fn, {1.0 - alpha, 0.0}, 0.25, 128);
        cdouble p256 = residue_probe(fn, {1.0 - alpha, 0.0}, 0.25, 256);
        CHECK(std::abs(p - p128) < 1e-8);
        CHECK(std::abs(p128 - p256) < 1e-8);
    }

    // pole location from the first moment
    auto fz = [&z](cdouble s) {
        cdouble w = s + 2.0;
        return z.zeta(ComplexPoint::of(w)).value / w;
    };
    cdouble loc = pole_location_probe(fz, {-1.0, 0.0}, 0.25, 128);
    CHECK(std::abs(loc - cdouble{-1.0, 0.0}) < 1e-9);

    // a contour discontinuity defeats the trapezoid rule: must be flagged
    auto broken = [](cdouble s) {
        return (s.real() > 1.0 ? 1.0 : 0.0) / (s - 1.0);
    };
    CHECK_THROWS_AS(residue_probe(broken, {1.0, 0.0}, 0.5, 64), UnreliableProbeError);
    CHECK_THROWS_AS(residue_probe(control, {1.0, 0.0}, 0.5, 8), std::invalid_argument);
}

TEST_CASE("nonvanishing scan on the sigma = 1 line") {
    ZetaEvaluator z;
    ScanResult wide = nonvanishing_scan(z, 0.5, 30.0, 0.01);
    CHECK(wide.min_abs > 0.0);
    CHECK(wide.argmin_t >= 0.5);
    CHECK(wide.argmin_t <= 30.0);

    // near the first critical-line zero ordinate, sigma=1 stays well away
    // from zero
    ScanResult near14 = nonvanishing_scan(z, 13.0, 16.0, 0.005);
    CHECK(near14.min_abs > 0.1);

    // degenerate scan: single evaluation
    ScanResult single = nonvanishing_scan(z, 2.5, 2.5, 0.1);
    CHECK(single.min_abs == std::abs(z.zeta({1.0, 2.5}).value));
    CHECK(single.argmin_t == 2.5);

    CHECK_THROWS_AS(nonvanishing_scan(z, -1.0, 2.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(nonvanishing_scan(z, 1.0, 2.0, 0.0), std::invalid_argument);
}

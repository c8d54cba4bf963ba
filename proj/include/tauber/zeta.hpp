// Riemann zeta, zeta', and -zeta'/zeta on sigma > 0 away from s = 1, via
// Euler-Maclaurin summation:
//
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//           + sum_{k=1}^{m} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
//
// with the error controlled by the first omitted correction term. zeta' uses
// the term-differentiated formula (same shape, extra -log N / digamma-style
// factors), which keeps a rigorous error form; finite differences exist only
// as a test oracle.
//
// Also here: contour probes (trapezoid rule on a circle, spectrally accurate
// for analytic integrands) for residues and pole locations, and a grid scan
// of |zeta(1+it)| - a spot-check, not a proof of nonvanishing.

#ifndef TAUBER_ZETA_HPP
#define TAUBER_ZETA_HPP

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "tauber/errors.hpp"
#include "tauber/eval_result.hpp"
#include "tauber/summation.hpp"

namespace tauber {

namespace detail {
// B_2 .. B_16 and (2k)!
inline constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,   -1.0 / 30.0,    1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,           -3617.0 / 510.0};
inline constexpr std::array<double, 8> kFact2k = {
    2.0, 24.0, 720.0, 40320.0, 3628800.0, 479001600.0, 87178291200.0,
    20922789888000.0};
} // namespace detail

class ZetaEvaluator {
public:
    ZetaEvaluator() = default;
    ZetaEvaluator(int n_cutoff, int bernoulli_terms)
        : n_cutoff_(n_cutoff), terms_(bernoulli_terms) {
        if (n_cutoff_ < 10)
            throw std::invalid_argument("ZetaEvaluator: cutoff must be >= 10");
        if (terms_ < 1 || terms_ > 8)
            throw std::invalid_argument("ZetaEvaluator: Bernoulli terms in 1..8");
    }

    int cutoff() const { return n_cutoff_; }
    int bernoulli_terms() const { return terms_; }

    EvalResult zeta(ComplexPoint sp) const {
        std::complex<double> s = check_point(sp);
        const int N = n_cutoff_;
        const double lnN = std::log(static_cast<double>(N));
        KahanSum<std::complex<double>> acc;
        for (int n = 1; n < N; ++n)
            acc.add(std::exp(-s * std::log(static_cast<double>(n))));
        std::complex<double> NmS = std::exp(-s * lnN);  // N^-s
        acc.add(NmS * static_cast<double>(N) / (s - 1.0));
        acc.add(0.5 * NmS);
        std::complex<double> term{};
        for (int k = 1; k <= terms_; ++k) {
            term = correction(s, k, NmS, N);
            acc.add(term);
        }
        EvalResult r;
        r.value = acc.value();
        r.error_estimate = em_error(s, sp.sigma, NmS, N);
        r.truncation_N = static_cast<std::uint64_t>(N);
        return r;
    }

    EvalResult zeta_prime(ComplexPoint sp) const {
        std::complex<double> s = check_point(sp);
        const int N = n_cutoff_;
        const double lnN = std::log(static_cast<double>(N));
        KahanSum<std::complex<double>> acc;
        for (int n = 2; n < N; ++n) {
            double ln = std::log(static_cast<double>(n));
            acc.add(-ln * std::exp(-s * ln));
        }
        std::complex<double> NmS = std::exp(-s * lnN);
        std::complex<double> N1mS = NmS * static_cast<double>(N);
        acc.add(N1mS * (-lnN / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0))));
        acc.add(-0.5 * lnN * NmS);
        for (int k = 1; k <= terms_; ++k)
            acc.add(correction_prime(s, k, NmS, lnN, N));
        EvalResult r;
        r.value = acc.value();
        r.error_estimate = em_prime_error(s, sp.sigma, NmS, lnN, N);
        r.truncation_N = static_cast<std::uint64_t>(N);
        return r;
    }

    // -zeta'(s)/zeta(s) with first-order error propagation.
    EvalResult log_deriv(ComplexPoint sp) const {
        EvalResult z = zeta(sp);
        if (std::abs(z.value) <= 1e-12)
            throw NearZeroError("log_deriv: |zeta(s)| numerically zero", std::abs(z.value));
        EvalResult zp = zeta_prime(sp);
        EvalResult r;
        r.value = -zp.value / z.value;
        double az = std::abs(z.value);
        r.error_estimate = zp.error_estimate / az +
                           std::abs(zp.value) * z.error_estimate / (az * az);
        r.truncation_N = z.truncation_N;
        return r;
    }

private:
    std::complex<double> check_point(ComplexPoint sp) const {
        require_finite(sp);
        if (!(sp.sigma > 0.0))
            throw std::domain_error("ZetaEvaluator: sigma <= 0 unsupported");
        std::complex<double> s = sp.value();
        double dist = std::abs(s - 1.0);
        if (dist <= 1e-8)
            throw NearPoleError("ZetaEvaluator: s within 1e-8 of the pole at 1", dist);
        return s;
    }

    // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    static std::complex<double> correction(std::complex<double> s, int k,
                                           std::complex<double> NmS, int N) {
        std::complex<double> poly = 1.0;
        for (int j = 0; j <= 2 * k - 2; ++j) poly *= (s + static_cast<double>(j));
        double scale = detail::kBernoulli[k - 1] / detail::kFact2k[k - 1];
        return scale * poly * NmS * std::pow(static_cast<double>(N), 1.0 - 2.0 * k);
    }

    static std::complex<double> correction_prime(std::complex<double> s, int k,
                                                 std::complex<double> NmS, double lnN,
                                                 int N) {
        std::complex<double> poly = 1.0;
        std::complex<double> dlog{};  // sum 1/(s+j)
        for (int j = 0; j <= 2 * k - 2; ++j) {
            poly *= (s + static_cast<double>(j));
            dlog += 1.0 / (s + static_cast<double>(j));
        }
        double scale = detail::kBernoulli[k - 1] / detail::kFact2k[k - 1];
        return scale * NmS * std::pow(static_cast<double>(N), 1.0 - 2.0 * k) *
               (poly * dlog - lnN * poly);
    }

    // |first omitted term| * |s+2m+1| / (sigma+2m+1): the classical bound on
    // the Euler-Maclaurin remainder.
    double em_error(std::complex<double> s, double sigma, std::complex<double> NmS,
                    int N) const {
        int k = terms_ + 1;
        if (k > 8) k = 8;  // no table entry beyond B_16; reuse the last term scale
        double inflate = std::abs(s + (2.0 * terms_ + 1.0)) / (sigma + 2.0 * terms_ + 1.0);
        return std::abs(correction(s, k, NmS, N)) * inflate + 1e-16 * n_cutoff_;
    }

    double em_prime_error(std::complex<double> s, double sigma, std::complex<double> NmS,
                          double lnN, int N) const {
        int k = terms_ + 1;
        if (k > 8) k = 8;
        double inflate = std::abs(s + (2.0 * terms_ + 1.0)) / (sigma + 2.0 * terms_ + 1.0);
        return std::abs(correction_prime(s, k, NmS, lnN, N)) * inflate +
               1e-16 * n_cutoff_ * lnN;
    }

    int n_cutoff_{100};
    int terms_{4};
};

// (1/2 pi i) * contour integral of s^moment * fn(s) over |s - s0| = radius,
// by the trapezoid rule with `nodes` equally spaced points (spectrally
// accurate when fn is analytic near the circle).
inline std::complex<double> contour_moment(
    const std::function<std::complex<double>(std::complex<double>)>& fn,
    ComplexPoint s0, double radius, int nodes, int moment = 0) {
    if (nodes < 16) throw std::invalid_argument("contour_moment: nodes >= 16");
    if (!(radius > 0.0)) throw std::invalid_argument("contour_moment: radius > 0");
    std::complex<double> center = s0.value();
    KahanSum<std::complex<double>> acc;
    const double twopi = 6.283185307179586476925286766559;
    for (int j = 0; j < nodes; ++j) {
        double theta = twopi * j / nodes;
        std::complex<double> w = radius * std::exp(std::complex<double>(0.0, theta));
        std::complex<double> s = center + w;
        std::complex<double> v = fn(s) * w;
        for (int p = 0; p < moment; ++p) v *= s;
        acc.add(v);
    }
    return acc.value() / static_cast<double>(nodes);
}

// Residue at s0 of fn (assumed analytic on the circle, excepting the probed
// pole). Evaluates at `nodes` and 2*nodes points and insists they agree;
// persistent disagreement raises UnreliableProbeError.
inline std::complex<double> residue_probe(
    const std::function<std::complex<double>(std::complex<double>)>& fn,
    ComplexPoint s0, double radius, int nodes) {
    std::complex<double> coarse = contour_moment(fn, s0, radius, nodes, 0);
    std::complex<double> fine = contour_moment(fn, s0, radius, 2 * nodes, 0);
    double gap = std::abs(fine - coarse);
    if (gap > 1e-8 * std::max(1.0, std::abs(fine)) + 1e-10)
        throw UnreliableProbeError("residue_probe: node doubling moved the value by " +
                                   std::to_string(gap));
    return fine;
}

// Pole location from the first contour moment: for a single simple pole
// inside the circle, M1/M0 = s_pole.
inline std::complex<double> pole_location_probe(
    const std::function<std::complex<double>(std::complex<double>)>& fn,
    ComplexPoint s0, double radius, int nodes) {
    std::complex<double> m0 = residue_probe(fn, s0, radius, nodes);
    std::complex<double> m1 = contour_moment(fn, s0, radius, 2 * nodes, 1);
    if (std::abs(m0) < 1e-12)
        throw UnreliableProbeError("pole_location_probe: residue numerically zero");
    return m1 / m0;
}

struct ScanResult {
    double min_abs{0.0};
    double argmin_t{0.0};
};

// Grid minimum of |zeta(1+it)| over [t_min, t_max]; finite, hence a
// spot-check only.
inline ScanResult nonvanishing_scan(const ZetaEvaluator& zeta, double t_min,
                                    double t_max, double step) {
    if (!(t_min > 0.0) || !(t_max >= t_min))
        throw std::invalid_argument("nonvanishing_scan: need 0 < t_min <= t_max");
    if (!(step > 0.0)) throw std::invalid_argument("nonvanishing_scan: step > 0");
    ScanResult best{std::numeric_limits<double>::infinity(), t_min};
    for (double t = t_min; t <= t_max + 0.5 * step; t += step) {
        double tt = std::min(t, t_max);
        double a = std::abs(zeta.zeta({1.0, tt}).value);
        if (a < best.min_abs) best = {a, tt};
        if (tt == t_max) break;
    }
    return best;
}

} // namespace tauber

#endif

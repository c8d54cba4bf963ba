// Test-only oracles, independent of the implementation paths they check:
// naive long-double summation, the Borwein alternating-series route to zeta,
// Richardson finite differences, and integral sandwiches for real zeta.

#ifndef TAUBER_TESTS_ORACLES_HPP
#define TAUBER_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>

#include "tauber/arith.hpp"
#include "tauber/zeta.hpp"

namespace oracles {

// sum_{n < x} chi(n) in long double, plain loop.
inline long double naive_psi(const tauber::ArithmeticFunction& chi, double x) {
    long double acc = 0.0L;
    for (std::uint64_t n = 1; n <= chi.truncation(); ++n) {
        if (static_cast<double>(n) >= x) break;
        acc += static_cast<long double>(chi(n));
    }
    return acc;
}

// f(e^x) e^{-alpha x} evaluated the slow way. Only meaningful away from the
// jump points (exp(log a) can land on either side of a).
inline long double naive_rho(const tauber::ArithmeticFunction& chi, double alpha,
                             double x) {
    return naive_psi(chi, std::exp(static_cast<long double>(x))) *
           std::exp(-static_cast<long double>(alpha) * x);
}

// sum_{n <= N} chi(n) n^-sigma in long double (real s only).
inline long double naive_dirichlet(const tauber::ArithmeticFunction& chi, double sigma) {
    long double acc = 0.0L;
    for (std::uint64_t n = 1; n <= chi.truncation(); ++n) {
        double v = chi(n);
        if (v == 0.0) continue;
        acc += static_cast<long double>(v) *
               std::pow(static_cast<long double>(n), -static_cast<long double>(sigma));
    }
    return acc;
}

// Borwein's alternating-series algorithm: zeta through the eta function,
// zeta(s) = -1/(d_n (1 - 2^{1-s})) * sum_{k=0}^{n-1} (-1)^k (d_k - d_n) (k+1)^-s.
// Real s away from 1; error ~ 3/(3+sqrt(8))^n.
inline long double eta_zeta(long double s, int n = 60) {
    long double t = 1.0L / n;  // t_0 = (n-1)!/n!
    long double dsum = t;
    long double* d = new long double[n + 1];
    // d_k = n * sum_{i<=k} t_i with t_{i+1} = t_i * 4(n+i)(n-i)/((2i+1)(2i+2))
    for (int k = 0; k <= n; ++k) {
        d[k] = n * dsum;
        if (k < n) {
            t *= 4.0L * (n + k) * (n - k) / ((2.0L * k + 1) * (2.0L * k + 2));
            dsum += t;
        }
    }
    long double sum = 0.0L;
    for (int k = 0; k < n; ++k) {
        long double term = (d[k] - d[n]) * std::pow(static_cast<long double>(k + 1), -s);
        sum += (k % 2 == 0) ? term : -term;
    }
    long double dn = d[n];
    delete[] d;
    return -sum / (dn * (1.0L - std::pow(2.0L, 1.0L - s)));
}

// Richardson-extrapolated central differences of zeta (3 levels, h = 1e-3).
inline std::complex<double> richardson_zeta_prime(const tauber::ZetaEvaluator& z,
                                                  tauber::ComplexPoint s) {
    auto diff = [&z, &s](double h) {
        std::complex<double> up = z.zeta({s.sigma + h, s.t}).value;
        std::complex<double> down = z.zeta({s.sigma - h, s.t}).value;
        return (up - down) / (2.0 * h);
    };
    std::complex<double> d1 = diff(1e-3);
    std::complex<double> d2 = diff(5e-4);
    std::complex<double> d3 = diff(2.5e-4);
    std::complex<double> r1 = (4.0 * d2 - d1) / 3.0;
    std::complex<double> r2 = (4.0 * d3 - d2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

// Integral sandwich for real zeta, sigma > 1:
//   S_M + (M+1)^{1-s}/(s-1) <= zeta(s) <= S_M + M^{1-s}/(s-1)
struct Sandwich {
    long double lower;
    long double upper;
};

inline Sandwich zeta_sandwich(long double s, int M = 100000) {
    long double partial = 0.0L;
    for (int n = 1; n <= M; ++n)
        partial += std::pow(static_cast<long double>(n), -s);
    long double up = partial + std::pow(static_cast<long double>(M), 1.0L - s) / (s - 1.0L);
    long double lo =
        partial + std::pow(static_cast<long double>(M + 1), 1.0L - s) / (s - 1.0L);
    return {lo, up};
}

} // namespace oracles

#endif

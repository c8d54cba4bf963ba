// Adaptive Simpson quadrature for complex-valued integrands on a real
// interval. The Richardson-extrapolated value S2 + (S2-S1)/15 is returned;
// the accumulated |S2-S1|/15 terms form the error estimate.

#ifndef TAUBER_QUADRATURE_HPP
#define TAUBER_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <utility>

#include "tauber/errors.hpp"

namespace tauber {

struct QuadResult {
    std::complex<double> value{};
    double error{0.0};
    bool converged{true};
};

namespace detail {

template <class F>
QuadResult simpson_recurse(F& f, double a, double b,
                           std::complex<double> fa, std::complex<double> fm,
                           std::complex<double> fb, std::complex<double> whole,
                           double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    std::complex<double> flm = f(lm);
    std::complex<double> frm = f(rm);
    std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    std::complex<double> delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
        QuadResult r;
        r.value = left + right + delta / 15.0;
        r.error = std::abs(delta) / 15.0;
        r.converged = std::abs(delta) <= 15.0 * tol;
        return r;
    }
    QuadResult rl = simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1);
    QuadResult rr = simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    return {rl.value + rr.value, rl.error + rr.error, rl.converged && rr.converged};
}

} // namespace detail

// Integrates f over [a, b]. Throws QuadratureError (carrying the best
// estimate) when the depth cap is reached with the tolerance unmet.
template <class F>
QuadResult adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 40) {
    if (!(b > a)) return {};
    std::complex<double> fa = f(a);
    std::complex<double> fb = f(b);
    double m = 0.5 * (a + b);
    std::complex<double> fm = f(m);
    std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    QuadResult r = detail::simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
    if (!r.converged)
        throw QuadratureError("adaptive_simpson: tolerance not met at depth cap",
                              r.value, r.error);
    return r;
}

} // namespace tauber

#endif

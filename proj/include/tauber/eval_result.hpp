// Shared result carrier for transform/series evaluations: value, error bar,
// and whether the error bar leans on the heuristic growth model for the
// truncated tail (rigorous when the flag is false).

#ifndef TAUBER_EVAL_RESULT_HPP
#define TAUBER_EVAL_RESULT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace tauber {

// A point s = sigma + it of the complex plane, kept as named parts because
// the half-plane conditions (sigma > 0, sigma > alpha, ...) are what the
// preconditions talk about.
struct ComplexPoint {
    double sigma{0.0};
    double t{0.0};

    std::complex<double> value() const { return {sigma, t}; }

    static ComplexPoint of(std::complex<double> z) { return {z.real(), z.imag()}; }
};

inline void require_finite(const ComplexPoint& s) {
    if (!std::isfinite(s.sigma) || !std::isfinite(s.t))
        throw std::invalid_argument("ComplexPoint: components must be finite");
}

struct EvalResult {
    std::complex<double> value{};
    double error_estimate{0.0};   // >= 0; rigorous unless tail_model_used
    bool tail_model_used{false};
    std::uint64_t truncation_N{0};
};

} // namespace tauber

#endif

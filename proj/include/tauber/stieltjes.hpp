// Lebesgue-Stieltjes measure of an ExpDecayStepFunction: atoms at the jump
// points with mass equal to the jump, plus the absolutely continuous part
// -alpha * c_k * e^{-alpha x} on each plateau interval. Atom masses are
// nonnegative and the density is nonpositive, so the signed measure needs no
// Jordan decomposition bookkeeping.
//
// generating-function identities (checked in the test suite):
//   mu([0, x))   = rho(x)
//   |mu|([0, x)) = T_rho(x)
//   mu({lambda_k}) = rho(lambda_k^+) - rho(lambda_k)

#ifndef TAUBER_STIELTJES_HPP
#define TAUBER_STIELTJES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tauber/eval_result.hpp"
#include "tauber/quadrature.hpp"
#include "tauber/step_function.hpp"
#include "tauber/summation.hpp"

namespace tauber {

struct DensityPiece {
    double lo;
    double hi;       // +inf on the final plateau of a complete-support rho
    double plateau;  // c_k; density(x) = -alpha * plateau * e^{-alpha x}
};

class StieltjesMeasure {
public:
    static StieltjesMeasure of(const ExpDecayStepFunction& rho) {
        StieltjesMeasure mu;
        mu.alpha_ = rho.alpha();
        mu.truncation_ = rho.base().truncation();
        std::size_t k = rho.jump_count();
        for (std::size_t i = 0; i < k; ++i) {
            mu.atom_loc_.push_back(rho.jump_position(i));
            mu.atom_mass_.push_back(rho.jump_size(i));
            double hi = (i + 1 < k) ? rho.jump_position(i + 1) : rho.domain_max();
            mu.pieces_.push_back({rho.jump_position(i), hi, rho.plateau_after(i)});
        }
        mu.tv_mass_ = rho.total_variation_limit();
        return mu;
    }

    double alpha() const { return alpha_; }
    const std::vector<double>& atom_locations() const { return atom_loc_; }
    const std::vector<double>& atom_masses() const { return atom_mass_; }
    const std::vector<DensityPiece>& pieces() const { return pieces_; }

    // |mu| of the whole representable domain; equals V(rho) when the support
    // is complete.
    double total_variation_mass() const { return tv_mass_; }

    // right end of the faithful domain (+inf for complete support)
    double domain_max() const {
        if (pieces_.empty()) return std::numeric_limits<double>::infinity();
        return pieces_.back().hi;
    }

    // mu([0, x))
    double mass_below(double x) const {
        KahanSum<double> acc;
        for (std::size_t i = 0; i < atom_loc_.size() && atom_loc_[i] < x; ++i)
            acc.add(atom_mass_[i]);
        for (const DensityPiece& p : pieces_) {
            if (p.lo >= x) break;
            double hi = std::min(p.hi, x);
            acc.add(p.plateau * (std::exp(-alpha_ * hi) - std::exp(-alpha_ * p.lo)));
        }
        return acc.value();
    }

    // |mu|([0, x))
    double abs_mass_below(double x) const {
        KahanSum<double> acc;
        for (std::size_t i = 0; i < atom_loc_.size() && atom_loc_[i] < x; ++i)
            acc.add(atom_mass_[i]);
        for (const DensityPiece& p : pieces_) {
            if (p.lo >= x) break;
            double hi = std::min(p.hi, x);
            acc.add(p.plateau * (std::exp(-alpha_ * p.lo) - std::exp(-alpha_ * hi)));
        }
        return acc.value();
    }

    // integral of g over [0, X) against the measure: exact atom sum plus
    // adaptive Simpson on each density piece. Exponential integrands get
    // closed forms in the transform module; this path stays fully numerical.
    EvalResult integrate(const std::function<std::complex<double>(double)>& g,
                         double X, double tol = 1e-10) const {
        if (!(X >= 0.0)) throw std::domain_error("StieltjesMeasure::integrate: X < 0");
        if (X > domain_max())
            throw std::domain_error("StieltjesMeasure::integrate: X beyond domain bound");
        KahanSum<std::complex<double>> acc;
        for (std::size_t i = 0; i < atom_loc_.size() && atom_loc_[i] < X; ++i)
            acc.add(g(atom_loc_[i]) * atom_mass_[i]);

        std::size_t live = 0;
        for (const DensityPiece& p : pieces_)
            if (p.lo < X) ++live;
        double piece_tol = live ? tol / static_cast<double>(live) : tol;

        double err = 0.0;
        double alpha = alpha_;
        for (const DensityPiece& p : pieces_) {
            if (p.lo >= X) break;
            double hi = std::min(p.hi, X);
            double c = p.plateau;
            QuadResult q = adaptive_simpson(
                [&g, alpha, c](double t) {
                    return g(t) * (-alpha * c * std::exp(-alpha * t));
                },
                p.lo, hi, piece_tol);
            acc.add(q.value);
            err += q.error;
        }
        EvalResult r;
        r.value = acc.value();
        r.error_estimate = err;
        r.tail_model_used = false;
        r.truncation_N = truncation_;
        return r;
    }

private:
    double alpha_{1.0};
    std::uint64_t truncation_{0};
    double tv_mass_{0.0};
    std::vector<double> atom_loc_;
    std::vector<double> atom_mass_;
    std::vector<DensityPiece> pieces_;
};

inline StieltjesMeasure measure_of(const ExpDecayStepFunction& rho) {
    return StieltjesMeasure::of(rho);
}

// |int_0^X g drho - rho(X) g(X) + int_0^X rho g'|, the finite-X residual of
// integration by parts (the rho(0) g(0) term vanishes since rho(0) = 0).
// rho is piecewise smooth, so int rho g' is summed plateau by plateau.
inline double by_parts_residual(const ExpDecayStepFunction& rho,
                                const std::function<std::complex<double>(double)>& g,
                                const std::function<std::complex<double>(double)>& gprime,
                                double X, double tol = 1e-12) {
    if (!(X >= 0.0)) throw std::domain_error("by_parts_residual: X < 0");
    StieltjesMeasure mu = StieltjesMeasure::of(rho);
    EvalResult lhs = mu.integrate(g, X, tol);

    std::size_t live = 0;
    for (const DensityPiece& p : mu.pieces())
        if (p.lo < X) ++live;
    double piece_tol = live ? tol / static_cast<double>(live) : tol;

    KahanSum<std::complex<double>> rg;
    double alpha = rho.alpha();
    for (const DensityPiece& p : mu.pieces()) {
        if (p.lo >= X) break;
        double hi = std::min(p.hi, X);
        double c = p.plateau;
        QuadResult q = adaptive_simpson(
            [&gprime, alpha, c](double t) {
                return gprime(t) * (c * std::exp(-alpha * t));
            },
            p.lo, hi, piece_tol);
        rg.add(q.value);
    }
    std::complex<double> boundary = rho.eval(X) * g(X);
    return std::abs(lhs.value - boundary + rg.value());
}

} // namespace tauber

#endif

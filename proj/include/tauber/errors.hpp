// Exception types shared across the library.

#ifndef TAUBER_ERRORS_HPP
#define TAUBER_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace tauber {

// Sieve/table allocation problems (N = 0, or the requested size cannot be
// materialized).
class SizingError : public std::runtime_error {
public:
    explicit SizingError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested closer to a pole than the closed forms tolerate.
class NearPoleError : public std::domain_error {
public:
    NearPoleError(const std::string& what, double distance)
        : std::domain_error(what), distance_(distance) {}
    double distance() const { return distance_; }

private:
    double distance_;
};

// Dirichlet series asked for a point left of the abscissa of convergence.
class AbscissaError : public std::domain_error {
public:
    explicit AbscissaError(const std::string& what) : std::domain_error(what) {}
};

// Adaptive quadrature hit its depth cap before meeting the tolerance.
// Carries the best estimate reached and its error bound.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, std::complex<double> best, double error)
        : std::runtime_error(what), best_estimate_(best), error_estimate_(error) {}
    std::complex<double> best_estimate() const { return best_estimate_; }
    double error_estimate() const { return error_estimate_; }

private:
    std::complex<double> best_estimate_;
    double error_estimate_;
};

// Contour probe whose node-doubling sequence did not settle.
class UnreliableProbeError : public std::runtime_error {
public:
    explicit UnreliableProbeError(const std::string& what) : std::runtime_error(what) {}
};

// log_deriv asked for a point where |zeta| is numerically zero.
class NearZeroError : public std::runtime_error {
public:
    NearZeroError(const std::string& what, double modulus)
        : std::runtime_error(what), modulus_(modulus) {}
    double modulus() const { return modulus_; }

private:
    double modulus_;
};

} // namespace tauber

#endif

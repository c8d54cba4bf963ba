// Sieve-backed nonnegative arithmetic functions chi(1..N) and the Chebyshev
// psi function. Sums use the strict half-open convention sum_{n < x}
// throughout, so psi(1) = 0 and integer jump points carry their pre-jump
// value.

#ifndef TAUBER_ARITH_HPP
#define TAUBER_ARITH_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tauber/errors.hpp"
#include "tauber/summation.hpp"

namespace tauber {

// What is known about chi(n) for n beyond the stored truncation. Drives the
// Dirichlet tail bounds: the first three classes give rigorous bounds, the
// last falls back to a fitted growth model.
enum class TailClass {
    finite_support,  // chi(n) = 0 for all n > N
    log_bounded,     // chi(n) <= log n for all n (von Mangoldt)
    const_bounded,   // chi(n) <= max stored value for all n (constant one)
    empirical,       // nothing known; model fitted from stored values
};

class ArithmeticFunction {
public:
    ArithmeticFunction(std::string name, std::vector<double> values, TailClass tailetc)
        : name_(std::move(name)), values_(std::move(values)), tail_(tailetc) {
        if (values_.empty())
            throw SizingError("ArithmeticFunction: N must be >= 1");
        for (double v : values_)
            if (!(v >= 0.0))
                throw std::invalid_argument("ArithmeticFunction: values must be nonnegative");
    }

    const std::string& name() const { return name_; }
    std::uint64_t truncation() const { return values_.size(); }
    TailClass tail_class() const { return tail_; }

    // chi(n), 1-indexed. Querying past the truncation is an error, never a
    // silent zero.
    double operator()(std::uint64_t n) const {
        if (n < 1 || n > values_.size())
            throw std::out_of_range("ArithmeticFunction: n outside 1..N");
        return values_[n - 1];
    }

    const std::vector<double>& values() const { return values_; }

    double max_value() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, v);
        return m;
    }

private:
    std::string name_;
    std::vector<double> values_;  // values_[i] = chi(i + 1)
    TailClass tail_;
};

// Von Mangoldt function via an Eratosthenes prime sieve; Lambda(p^k) = log p
// with the log taken once per prime and reused for its powers.
inline ArithmeticFunction sieve_von_mangoldt(std::uint64_t N) {
    if (N < 1) throw SizingError("sieve_von_mangoldt: N must be >= 1");
    std::vector<double> values;
    std::vector<bool> composite;
    try {
        values.assign(N, 0.0);
        composite.assign(N + 1, false);
    } catch (const std::bad_alloc&) {
        throw SizingError("sieve_von_mangoldt: sieve allocation failed for N = " +
                          std::to_string(N));
    } catch (const std::length_error&) {
        throw SizingError("sieve_von_mangoldt: sieve size overflow for N = " +
                          std::to_string(N));
    }
    for (std::uint64_t i = 2; i * i <= N; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= N; j += i) composite[j] = true;
    }
    for (std::uint64_t p = 2; p <= N; ++p) {
        if (composite[p]) continue;
        double logp = std::log(static_cast<double>(p));
        for (std::uint64_t q = p; q <= N; q *= p) {
            values[q - 1] = logp;
            if (q > N / p) break;  // q*p would overflow past N
        }
    }
    return ArithmeticFunction("von_mangoldt", std::move(values), TailClass::log_bounded);
}

inline ArithmeticFunction constant_one(std::uint64_t N) {
    if (N < 1) throw SizingError("constant_one: N must be >= 1");
    return ArithmeticFunction("one", std::vector<double>(N, 1.0), TailClass::const_bounded);
}

// psi(x) = sum_{n < x} chi(n), strict inequality. Defined for 1 <= x <= N+1.
// Kahan compensation keeps the error proportional to one rounding unit of
// the total rather than the term count.
inline double chebyshev_psi(const ArithmeticFunction& chi, double x) {
    if (!(x >= 1.0) || !(x <= static_cast<double>(chi.truncation()) + 1.0))
        throw std::domain_error("chebyshev_psi: x outside [1, N+1]");
    std::uint64_t last = static_cast<std::uint64_t>(std::ceil(x)) - 1;  // largest n < x
    KahanSum<double> acc;
    const std::vector<double>& v = chi.values();
    for (std::uint64_t n = 1; n <= last; ++n) acc.add(v[n - 1]);
    return acc.value();
}

} // namespace tauber

#endif

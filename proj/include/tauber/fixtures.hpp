// Canonical test/demo inputs shared by the harness and the test suite.

#ifndef TAUBER_FIXTURES_HPP
#define TAUBER_FIXTURES_HPP

#include <cstdint>
#include <vector>

#include "tauber/arith.hpp"
#include "tauber/step_function.hpp"

namespace tauber::fixtures {

// chi(2) = 1, everything else 0; the support is complete, so the damped
// function lives on all of R+ with a single jump at log 2.
inline ArithmeticFunction single_jump_chi() {
    return ArithmeticFunction("single_jump", {0.0, 1.0}, TailClass::finite_support);
}

inline ExpDecayStepFunction single_jump_rho(double alpha = 1.0) {
    return ExpDecayStepFunction(StepFunction(single_jump_chi()), alpha);
}

// chi identically zero (finite support too: no jumps anywhere).
inline ArithmeticFunction zero_chi(std::uint64_t N = 16) {
    return ArithmeticFunction("zero", std::vector<double>(N, 0.0),
                              TailClass::finite_support);
}

inline ExpDecayStepFunction zero_rho(double alpha = 1.0, std::uint64_t N = 16) {
    return ExpDecayStepFunction(StepFunction(zero_chi(N)), alpha);
}

inline ExpDecayStepFunction von_mangoldt_rho(double alpha, std::uint64_t N) {
    return ExpDecayStepFunction(StepFunction(sieve_von_mangoldt(N)), alpha);
}

inline ExpDecayStepFunction const_one_rho(double alpha, std::uint64_t N) {
    return ExpDecayStepFunction(StepFunction(constant_one(N)), alpha);
}

} // namespace tauber::fixtures

#endif

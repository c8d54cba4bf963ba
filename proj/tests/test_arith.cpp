#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "tauber/arith.hpp"
#include "tauber/rng.hpp"
#include "tauber/step_function.hpp"

using namespace tauber;

namespace {
// independent prime-power test by trial division
bool is_prime_power(std::uint64_t n, std::uint64_t* base) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        if (n != 1) return false;
        *base = p;
        return true;
    }
    *base = n;  // n itself prime
    return true;
}
} // namespace

TEST_CASE("von Mangoldt sieve matches the definition") {
    ArithmeticFunction lam = sieve_von_mangoldt(1000);
    CHECK(lam(1) == 0.0);
    CHECK(lam(2) == std::log(2.0));
    CHECK(lam(8) == std::log(2.0));
    CHECK(lam(9) == std::log(3.0));
    CHECK(lam(6) == 0.0);
    CHECK(lam(64) == std::log(2.0));
    CHECK(lam(97) == std::log(97.0));
    CHECK(lam(100) == 0.0);

    for (std::uint64_t n = 1; n <= 1000; ++n) {
        std::uint64_t p = 0;
        if (is_prime_power(n, &p))
            CHECK(lam(n) == std::log(static_cast<double>(p)));
        else
            CHECK(lam(n) == 0.0);
    }
}

TEST_CASE("arithmetic function sizing and range errors") {
    CHECK_THROWS_AS(sieve_von_mangoldt(0), SizingError);
    CHECK_THROWS_AS(constant_one(0), SizingError);
    CHECK_THROWS_AS(ArithmeticFunction("empty", {}, TailClass::empirical), SizingError);
    CHECK_THROWS_AS(ArithmeticFunction("neg", {1.0, -0.5}, TailClass::empirical),
                    std::invalid_argument);

    ArithmeticFunction lam = sieve_von_mangoldt(10);
    CHECK_THROWS_AS(lam(0), std::out_of_range);
    CHECK_THROWS_AS(lam(11), std::out_of_range);
}

TEST_CASE("chebyshev psi small values") {
    ArithmeticFunction lam = sieve_von_mangoldt(100);
    CHECK(chebyshev_psi(lam, 1.0) == 0.0);
    CHECK(chebyshev_psi(lam, 2.0) == 0.0);  // only n=1 contributes, Lambda(1)=0
    // 3 log 2 + 2 log 3 + log 5 + log 7, frozen from the long-double oracle
    CHECK(chebyshev_psi(lam, 10.0) ==
          doctest::Approx(7.8320141805054690).epsilon(1e-14));
    CHECK(chebyshev_psi(lam, 10.0) ==
          doctest::Approx(static_cast<double>(oracles::naive_psi(lam, 10.0)))
              .epsilon(1e-14));
    // plateau between integers: Lambda(10)=0 so nothing changes until 11
    CHECK(chebyshev_psi(lam, 10.5) == chebyshev_psi(lam, 11.0));

    CHECK_THROWS_AS(chebyshev_psi(lam, 0.5), std::domain_error);
    CHECK_THROWS_AS(chebyshev_psi(lam, 102.0), std::domain_error);
}

TEST_CASE("compensated psi tracks the long-double oracle to 1e-12 relative") {
    ArithmeticFunction lam = sieve_von_mangoldt(10000000);
    for (double x : {1e4, 1e6, 1e7}) {
        long double ref = oracles::naive_psi(lam, x);
        double got = chebyshev_psi(lam, x);
        CHECK(std::abs(got - static_cast<double>(ref)) <=
              1e-12 * static_cast<double>(ref));
    }
    // desk-scale PNT: psi(1e7)/1e7 within 1 percent of 1
    CHECK(std::abs(chebyshev_psi(lam, 1e7) / 1e7 - 1.0) < 0.01);
}

TEST_CASE("constant-one counts integers") {
    ArithmeticFunction one = constant_one(1000000);
    CHECK(chebyshev_psi(one, 5.5) == 5.0);
    CHECK(chebyshev_psi(one, 1.0) == 0.0);
    CHECK(chebyshev_psi(one, 1e6) == 999999.0);
    CHECK(chebyshev_psi(one, 1e6) / 1e6 == 0.999999);
}

TEST_CASE("psi is monotone since chi >= 0") {
    ArithmeticFunction lam = sieve_von_mangoldt(2000);
    SplitMix64 g(42);
    for (int i = 0; i < 200; ++i) {
        double x = 1.0 + g.uniform01() * 2000.0;
        double y = 1.0 + g.uniform01() * 2000.0;
        if (x > y) std::swap(x, y);
        CHECK(chebyshev_psi(lam, x) <= chebyshev_psi(lam, y));
    }
}

TEST_CASE("jump criterion: f jumps exactly by chi(n) at integers") {
    ArithmeticFunction lam = sieve_von_mangoldt(200);
    StepFunction f(lam);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        CHECK(f.jump_at(n) == lam(n));  // exact on the stored representation
        if (lam(n) == 0.0) {
            double xn = static_cast<double>(n);
            CHECK(f.eval_right(xn) == f.eval_left(xn));  // continuity iff chi = 0
        }
    }
}

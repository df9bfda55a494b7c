#include "polyexp/special.hpp"

#include <doctest.h>

#include <cmath>

using namespace polyexp;

namespace {

/// Composite Simpson in extended precision.
long double simpson(long double (*f)(long double), long double a, long double b, int n) {
    const long double h = (b - a) / n;
    long double acc = f(a) + f(b);
    for (int k = 1; k < n; ++k) {
        acc += f(a + k * h) * (k % 2 ? 4.0L : 2.0L);
    }
    return acc * h / 3.0L;
}

}  // namespace

TEST_CASE("gamma function") {
    CHECK(std::abs(gamma_fn(0.5) - std::sqrt(pi)) < 1e-15);
    CHECK(std::abs(gamma_fn(5.0) - 24.0) < 1e-13);
    CHECK(std::abs(gamma_fn(2.5) - 3.0 * std::sqrt(pi) / 4.0) < 1e-15);
    for (double x : {0.1, 0.7, 1.3, 3.9, 12.5, 30.2, -0.5, -2.7}) {
        CHECK(gamma_fn(x).real() == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
        CHECK(std::abs(gamma_fn(x).imag()) < 1e-300);
    }
    // reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    for (Complex z : {Complex(0.3, 1.2), Complex(-1.7, 0.4), Complex(2.2, -3.0)}) {
        const Complex lhs = gamma_fn(z) * gamma_fn(1.0 - z);
        const Complex rhs = pi / std::sin(pi * z);
        CHECK(std::abs(lhs - rhs) < 1e-13 * std::abs(rhs));
    }
    // Gamma(1 + i) from |Gamma(1 + i)|^2 = pi / sinh(pi)
    CHECK(std::norm(gamma_fn(Complex(1.0, 1.0))) == doctest::Approx(pi / std::sinh(pi)).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_fn(-3.0), Error);
    CHECK_THROWS_AS(gamma_fn(0.0), Error);
}

TEST_CASE("reciprocal gamma and rising factorial") {
    CHECK(rgamma(-2.0) == Complex(0.0));
    CHECK(rgamma(0.0) == Complex(0.0));
    CHECK(std::abs(rgamma(4.0) - 1.0 / 6.0) < 1e-16);
    CHECK(rising_factorial(-2.0, 3) == Complex(0.0));
    CHECK(std::abs(rising_factorial(0.5, 3) - 0.5 * 1.5 * 2.5) < 1e-15);
    CHECK(rising_factorial(Complex(1.0, 1.0), 0) == Complex(1.0));
    CHECK(std::abs(sin_pi(3.0)) == 0.0);
    CHECK(std::abs(sin_pi(0.5) - 1.0) < 1e-16);
}

TEST_CASE("log gamma") {
    for (double x : {0.5, 1.0, 2.0, 10.3, 80.0}) {
        CHECK(log_gamma(x).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-14));
    }
}

TEST_CASE("lower incomplete gamma") {
    CHECK(lower_inc_gamma(1.0, 1.0).value.real() == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(lower_inc_gamma(2.3, 0.0).value == Complex(0.0));
    // gamma(1/2, x) = sqrt(pi) erf(sqrt(x))
    CHECK(lower_inc_gamma(0.5, 2.0).value.real() ==
          doctest::Approx(std::sqrt(pi) * std::erf(std::sqrt(2.0))).epsilon(1e-14));
    // gamma(2.5, 3) against Simpson after t = u^2, which makes the integrand smooth
    const long double q =
        simpson([](long double u) { return 2.0L * std::pow(u, 4.0L) * std::exp(-u * u); }, 0.0L, std::sqrt(3.0L), 20000);
    CHECK(lower_inc_gamma(2.5, 3.0).value.real() == doctest::Approx(double(q)).epsilon(1e-12));
    CHECK(lower_inc_gamma(3.0, 40.0).value.real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(lower_inc_gamma(-0.5, 1.0), Error);
    CHECK_THROWS_AS(lower_inc_gamma(1.0, -1.0), Error);
}

TEST_CASE("entire exponential integral") {
    CHECK(ein(0.0) == Complex(0.0));
    // Ein(x) = gamma + log x - Ei(-x) for x > 0
    CHECK(ein(1.0).real() == doctest::Approx(euler_gamma - std::expint(-1.0)).epsilon(1e-15));
    CHECK(ein(7.5).real() == doctest::Approx(euler_gamma + std::log(7.5) - std::expint(-7.5)).epsilon(1e-14));
    // Ein(-1) = -e_2(1), 25-term direct sum
    double e2 = 0.0;
    double w = 1.0;
    for (int n = 0; n < 25; ++n) {
        e2 += w / ((n + 1.0) * (n + 1.0));
        w /= n + 1;
    }
    CHECK(ein(-1.0).real() == doctest::Approx(-e2).epsilon(1e-15));
    const long double q = simpson([](long double t) { return t == 0 ? 1.0L : (1.0L - std::exp(-t)) / t; }, 0.0L,
                                  1.0L, 2000);
    CHECK(ein(1.0).real() == doctest::Approx(double(q)).epsilon(1e-13));
}

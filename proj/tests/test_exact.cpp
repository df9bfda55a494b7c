#include "polyexp/exact.hpp"

#include <doctest.h>

#include <cmath>

using namespace polyexp::exact;

namespace {

/// Akiyama-Tanigawa; yields B_1 = +1/2, flipped below.
BigRational bernoulli_oracle(unsigned n) {
    std::vector<BigRational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = BigRational(1, m + 1);
        a[m].canonicalize();
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
        }
    }
    return n == 1 ? -a[0] : a[0];
}

/// Inclusion-exclusion formula.
BigInt stirling_oracle(unsigned n, unsigned k) {
    BigInt acc = 0;
    for (unsigned j = 0; j <= k; ++j) {
        BigInt term = binomial(k, j);
        BigInt power = 1;
        for (unsigned e = 0; e < n; ++e) {
            power *= (k - j);
        }
        term *= power;
        acc += (j % 2 ? -term : term);
    }
    return acc / factorial(k);
}

ExactPoly poly(std::vector<BigRational> c) { return ExactPoly(std::move(c)); }

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
    const BigRational q = make_rational(6, -4);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(BigRational(0)) == "0/1");
    CHECK(parse_rational_literal("-0.125") == BigRational(-1, 8));
    CHECK(parse_rational_literal("10/4") == BigRational(5, 2));
    CHECK(parse_rational_literal("7") == BigRational(7));
    CHECK(to_double(BigRational(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
}

TEST_CASE("polynomial arithmetic") {
    const ExactPoly x = ExactPoly::monomial(1, 1);
    const ExactPoly p = x * x - ExactPoly::constant(1);
    CHECK(p.degree() == 2);
    CHECK(ExactPoly().degree() == -1);
    CHECK((p - p).is_zero());
    const auto [q, r] = divmod(p, x - ExactPoly::constant(1));
    CHECK(q == x + ExactPoly::constant(1));
    CHECK(r.is_zero());
    CHECK(gcd(p, x * x + BigRational(2) * x + ExactPoly::constant(1)) == x + ExactPoly::constant(1));
    CHECK(p.compose_linear(1, 1) == x * x + BigRational(2) * x);
    CHECK(p.derivative() == BigRational(2) * x);
    CHECK(p.integral() == poly({0, -1, 0, BigRational(1, 3)}));
    CHECK(pow(x + ExactPoly::constant(1), 3) == poly({1, 3, 3, 1}));
    CHECK(p(BigRational(3)) == 8);
    CHECK(std::abs(p.evaluate({0.0, 1.0}) - std::complex<double>(-2.0, 0.0)) < 1e-15);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == BigRational(-1, 2));
    CHECK(bernoulli(2) == BigRational(1, 6));
    CHECK(bernoulli(12) == BigRational(-691, 2730));
    for (unsigned n = 0; n <= 30; ++n) {
        CHECK(bernoulli(n) == bernoulli_oracle(n));
    }
}

TEST_CASE("stirling numbers of the second kind") {
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 0) == 0);
    CHECK(stirling2(2, 5) == 0);
    CHECK(stirling2(5, 3) == 25);
    for (unsigned n = 0; n <= 18; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(stirling2(n, k) == stirling_oracle(n, k));
        }
    }
}

TEST_CASE("exponential polynomials") {
    CHECK(phi_poly(0) == poly({1}));
    CHECK(phi_poly(2) == poly({0, 1, 1}));
    CHECK(phi_poly(3) == poly({0, 1, 3, 1}));
    // Bell numbers at x = 1
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147};
    for (unsigned n = 0; n < 10; ++n) {
        CHECK(phi_poly(n)(BigRational(1)) == bell[n]);
    }
}

TEST_CASE("Q_p polynomials") {
    // rows are powers of x, columns powers of lambda
    auto same = [](const BivariatePoly& q, std::vector<std::vector<int>> want) {
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                const int w = i < want.size() && j < want[i].size() ? want[i][j] : 0;
                if (q.coeff(i, j) != w) {
                    return false;
                }
            }
        }
        return true;
    };
    CHECK(same(q_poly(0), {{1}}));
    CHECK(same(q_poly(1), {{0, 1}, {1, 0}}));
    CHECK(same(q_poly(2), {{0, 0, 1}, {1, 2, 0}, {1, 0, 0}}));
    // brute force sum_n (n + l)^p x^n / n! = e^x Q_p(x, l) at x = 0.5, l = 1.5
    for (unsigned p = 0; p <= 6; ++p) {
        double brute = 0.0;
        double w = 1.0;
        for (int n = 0; n < 60; ++n) {
            brute += std::pow(n + 1.5, p) * w;
            w *= 0.5 / (n + 1);
        }
        const double q = q_poly(p).evaluate(0.5, 1.5).real();
        CHECK(std::exp(0.5) * q == doctest::Approx(brute).epsilon(1e-13));
    }
}

TEST_CASE("euler polynomials") {
    CHECK(euler_poly(0) == poly({1}));
    CHECK(euler_poly(1) == poly({BigRational(-1, 2), 1}));
    CHECK(euler_poly(2) == poly({0, -1, 1}));
    // E_3(l) = l^3 - 3/2 l^2 + 1/4
    CHECK(euler_poly(3) == poly({BigRational(1, 4), 0, BigRational(-3, 2), 1}));
}

TEST_CASE("faulhaber polynomials") {
    CHECK(faulhaber_poly(1)(BigRational(4)) == 6);
    CHECK(faulhaber_poly(2)(BigRational(4)) == 14);
    for (unsigned n = 1; n <= 10; ++n) {
        BigInt brute = 0;
        for (unsigned j = 1; j < n; ++j) {
            BigInt t = 1;
            for (int e = 0; e < 5; ++e) {
                t *= j;
            }
            brute += t;
        }
        CHECK(faulhaber_poly(5)(BigRational(n)) == BigRational(brute));
    }
}

TEST_CASE("exponential moments") {
    CHECK(exp_moment(0) == BigRational(1, 2));
    CHECK(exp_moment(1) == BigRational(-1, 4));
    CHECK(exp_moment(2) == 0);
    for (unsigned p = 0; p <= 15; ++p) {
        CHECK(exp_moment(p) == exp_moment_stirling(p));
    }
    // term-wise: int_0^inf e^(-2t) (-t)^k dt = (-1)^k k! / 2^(k+1)
    for (unsigned p = 0; p <= 10; ++p) {
        BigRational acc = 0;
        const ExactPoly phi = phi_poly(p);
        for (int k = 0; k <= phi.degree(); ++k) {
            BigRational m = BigRational(factorial(k));
            m /= BigRational(BigInt(1) << (k + 1));
            acc += (k % 2 ? -m : m) * phi.coeff(k);
        }
        CHECK(acc == exp_moment(p));
    }
}

TEST_CASE("antiderivatives of phi") {
    const ExactPoly x = ExactPoly::monomial(1, 1);
    CHECK(phi_antiderivative(0) == x);
    CHECK(phi_antiderivative(1) == poly({0, 0, BigRational(1, 2)}));
    for (unsigned p = 0; p <= 12; ++p) {
        CHECK(phi_antiderivative(p) == phi_antiderivative_bernoulli(p));
    }
}

TEST_CASE("sums of power sums") {
    CHECK(h_neg_closed_poly(0) == poly({0, 1}));
    CHECK(h_neg_closed_poly(3) == poly({0, 1, BigRational(7, 2), 2, BigRational(1, 4)}));
    CHECK(h_neg_closed_poly(2) == poly({0, 1, BigRational(3, 2), BigRational(1, 3)}));
    // direct series sum x^n/n! (1^2 + ... + n^2) with 25 terms at x = 1
    double direct = 0.0;
    double w = 1.0;
    double partial = 0.0;
    for (int n = 1; n <= 25; ++n) {
        w /= n;
        partial += double(n) * n;
        direct += w * partial;
    }
    CHECK(std::exp(1.0) * to_double(h_neg_closed_poly(2)(BigRational(1))) == doctest::Approx(direct).epsilon(1e-14));
    for (unsigned p = 0; p <= 12; ++p) {
        CHECK(h_neg_closed_poly(p) == h_neg_closed_poly_via_antiderivative(p));
    }
}

TEST_CASE("alternating zeta at negative integers") {
    CHECK(eta_neg_int(0) == BigRational(1, 2));
    CHECK(eta_neg_int(1) == BigRational(1, 4));
    CHECK(eta_neg_int(2) == 0);
    CHECK(eta_neg_int(3) == BigRational(-1, 8));
    CHECK(zeta_neg_int(0) == BigRational(-1, 2));
    CHECK(zeta_neg_int(1) == BigRational(-1, 12));
    CHECK(zeta_neg_int(3) == BigRational(1, 120));
    for (unsigned p = 0; p <= 10; ++p) {
        CHECK(BigRational(2) * eta_neg_poly(p) == euler_poly(p));
    }
    // Without the boundary term the k = 0 weight would give -1/2 at p = 0, l = 1.
    CHECK(eta_neg_poly(0)(BigRational(1)) == BigRational(1, 2));
}

TEST_CASE("exp2 integral parts") {
    // int_0^x e^(-2t) dt = 1/2 - e^(-2x)/2
    const auto [c0, c] = exp2_integral_parts(poly({1}));
    CHECK(c0 == BigRational(1, 2));
    CHECK(c == poly({BigRational(1, 2)}));
    for (unsigned p = 0; p <= 8; ++p) {
        CHECK(exp2_integral_parts(phi_poly(p)).first == exp_moment(p));
    }
}

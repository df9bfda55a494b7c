#include "polyexp/polyexp.hpp"
#include "polyexp/series.hpp"
#include "polyexp/special.hpp"
#include "polyexp/transforms.hpp"

#include <doctest.h>

#include <cmath>

using namespace polyexp;

namespace {

/// Sum x^n/n! sum_{j<n} w^j (lambda+j)^(-s) in extended precision.
std::complex<long double> brute(Complex s, Complex lambda, Complex w, Complex x, int terms = 200) {
    using C = std::complex<long double>;
    const C cs(s.real(), s.imag());
    const C cl(lambda.real(), lambda.imag());
    const C cw(w.real(), w.imag());
    const C cx(x.real(), x.imag());
    C prefix = 0.0L;
    C wj = 1.0L;
    C weight = 1.0L;
    C acc = 0.0L;
    for (int n = 1; n < terms; ++n) {
        prefix += wj * std::exp(-cs * std::log(C(n - 1) + cl));
        wj *= cw;
        weight *= cx / C(n);
        acc += weight * prefix;
    }
    return acc;
}

Complex to_c(std::complex<long double> z) { return {double(z.real()), double(z.imag())}; }

double mixed(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

TEST_CASE("direct h-series against brute force") {
    for (Complex s : {Complex(1.0), Complex(2.0), Complex(-2.0), Complex(0.5, 1.0)}) {
        for (Complex w : {Complex(1.0), Complex(-1.0), Complex(0.0, 1.0)}) {
            for (Complex x : {Complex(0.5), Complex(-3.0), Complex(2.0, 2.0)}) {
                const auto r = h_direct({s, 1.5, w, x});
                const Complex want = to_c(brute(s, 1.5, w, x));
                CHECK(std::abs(r.value - want) <= r.abs_err + 1e-15 * std::abs(want));
            }
        }
    }
    CHECK(h_direct({2.0, 1.0, 1.0, 0.0}).value == Complex(0.0));
    CHECK_THROWS_AS(h_direct({2.0, 1.0, 1.5, 1.0}), Error);
    CHECK_THROWS_AS(h_direct({2.0, -1.0, 1.0, 1.0}), Error);
}

TEST_CASE("scaled h-series") {
    for (double x : {1.0, 10.0, 30.0}) {
        const HSeriesParams p{2.0, 1.0, 1.0, x};
        CHECK(mixed(h_direct_scaled(p).value, std::exp(-x) * h_direct(p).value) < 1e-12);
    }
    const auto far = h_direct_scaled({2.0, 1.0, 1.0, 600.0});
    CHECK(std::abs(far.value - pi * pi / 6.0) < 2e-3);
}

TEST_CASE("direct and quadrature agree on the grid") {
    for (double s : {1.0, 2.0, -2.0}) {
        for (double l : {1.0, 1.5}) {
            for (double w : {1.0, -1.0, 0.5}) {
                for (double x : {0.5, 1.0, 2.0}) {
                    const HSeriesParams p{s, l, w, x};
                    CHECK(mixed(h_direct(p).value, h_quadrature(p).value) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("h_1 via Ein") {
    for (Complex w : {Complex(1.0), Complex(-1.0), Complex(0.5), Complex(0.0, 1.0)}) {
        for (double x : {0.5, 1.0, 2.0}) {
            CHECK(mixed(h1_closed(w, x), to_c(brute(1.0, 1.0, w, x))) < 1e-9);
        }
    }
    // w = 1: e^x (gamma + log x - Ei(-x))
    const double x = 1.7;
    CHECK(mixed(h1_closed(1.0, x), std::exp(x) * (euler_gamma + std::log(x) - std::expint(-x))) < 1e-14);
    CHECK_THROWS_AS(h1_closed(0.0, 1.0), Error);
}

TEST_CASE("power-sum generating functions") {
    // sum x^n/n! (1^3 + ... + n^3) = x e^x (x^3 + 8x^2 + 14x + 4) / 4
    CHECK(mixed(h_neg_eval(3, 1.0), 27.0 * std::exp(1.0) / 4.0) < 1e-15);
    for (unsigned p = 0; p <= 6; ++p) {
        for (double x : {0.5, 1.0, -2.0}) {
            CHECK(mixed(h_neg_eval(p, x), to_c(brute(-double(p), 1.0, 1.0, x))) < 1e-12);
            CHECK(mixed(h_neg_eval_via_antiderivative(p, x), h_neg_eval(p, x)) < 1e-13);
        }
    }
}

TEST_CASE("alternating power sums") {
    for (unsigned p = 1; p <= 3; ++p) {
        for (double x : {0.5, 1.0}) {
            CHECK(mixed(h_neg_alt_eval(p, x).value, to_c(brute(-double(p), 1.0, -1.0, x))) < 1e-9);
        }
    }
    for (unsigned p = 4; p <= 8; ++p) {
        CHECK(mixed(h_neg_alt_eval(p, 2.5).value, to_c(brute(-double(p), 1.0, -1.0, 2.5))) < 1e-11);
    }
    CHECK_THROWS_AS(h_neg_alt_eval(0, 1.0), Error);
}

TEST_CASE("borel means") {
    const auto z = borel_probe(2.0, 1.0, 1.0, {10.0, 20.0, 40.0});
    REQUIRE(z.size() == 3);
    double last = 1.0;
    for (const auto& pt : z) {
        const double err = std::abs(pt.value - pi * pi / 6.0);
        CHECK(err < last);
        CHECK(std::abs(pt.target - pi * pi / 6.0) < 1e-9);
        last = err;
    }
    CHECK(last < 0.05);
    const auto e = borel_probe(0.5, 1.0, -1.0, {10.0, 20.0, 40.0});
    const Complex eta_half = (1.0 - std::sqrt(2.0)) * -1.4603545088095868;
    CHECK(std::abs(e.back().target - eta_half) < 1e-8);
    CHECK(std::abs(e.back().value - eta_half) < std::abs(e.front().value - eta_half) + 1e-12);
    const auto l = borel_probe(2.0, 1.0, 0.5, {5.0, 10.0});
    CHECK(std::abs(l.back().target - lerch_phi_series(0.5, 2.0, 1.0).value) < 1e-9);
    CHECK(std::abs(l.back().value - l.back().target) < std::abs(l.front().value - l.front().target));
    CHECK_THROWS_AS(borel_probe(0.5, 1.0, 1.0, {10.0}), Error);
    CHECK_THROWS_AS(borel_probe(2.0, 1.0, 1.0, {20.0, 10.0}), Error);
}

TEST_CASE("large-lambda expansion of h") {
    const auto a0 = h_asymptotic_lambda(2.0, 40.0, 1.0, 0);
    CHECK(mixed(a0.value, std::exp(1.0) / 1600.0) < 1e-15);
    const Complex direct = h_direct({2.0, 40.0, 1.0, 1.0}).value;
    CHECK(std::abs(h_asymptotic_lambda(2.0, 40.0, 1.0, 3).value - direct) <=
          h_asymptotic_lambda(2.0, 40.0, 1.0, 3).abs_err);
    const Complex d1 = h_direct({1.0, 25.0, 1.0, 0.5}).value;
    double last = 1.0;
    for (unsigned order = 0; order <= 5; ++order) {
        const double err = std::abs(h_asymptotic_lambda(1.0, 25.0, 0.5, order).value - d1);
        CHECK(err < last);
        last = err;
    }
    CHECK_THROWS_AS(h_asymptotic_lambda(1.0, 25.0, 0.5, 11), Error);
}

TEST_CASE("h' - h = e_s(x w, lambda)") {
    const HSeriesParams p{1.5, 1.2, -1.0, 0.8};
    const double h = 1e-5;
    HSeriesParams lo = p;
    HSeriesParams hi = p;
    lo.x -= h;
    hi.x += h;
    const Complex d = (h_direct(hi).value - h_direct(lo).value) / (2.0 * h);
    CHECK(std::abs(d - h_direct(p).value - eval_series(1.5, 1.2, -0.8).value) < 1e-5);
}

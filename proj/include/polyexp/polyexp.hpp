#pragma once

// Numeric evaluation of the polyexponential
//
//     e_s(x, lambda) = sum_{n>=0} x^n / (n! (n + lambda)^s),   Re lambda > 0,
//
// by independent routes. All powers use the principal branch.

#include "polyexp/types.hpp"

#include <cstdint>
#include <functional>

namespace polyexp {

/// Maximum number of terms any series route may sum (default 10000).
std::int64_t series_term_cap();
void set_series_term_cap(std::int64_t cap);

/// Direct partial sum with an analytic tail bound.
///
/// For n > N the terms are bounded by |x|^n/n! * M * G, where
/// G = exp(|Im s| |arg(N+1+lambda)|) and M is (N+1+Re lambda)^(-Re s) when
/// Re s >= 0, otherwise (N+1+|lambda|)^|Re s| times the growth ratio. Summation
/// stops once the geometric ratio is <= 1/2 and 2 * bound <= tol.
EvalResult eval_series(Complex s, Complex lambda, Complex x, double tol = default_tol);

/// e_{-p}(x, lambda) = e^x Q_p(x, lambda).
Complex eval_negint(unsigned p, Complex lambda, Complex x);

/// p-fold integral recursion e_{q+1}(x) = int_0^1 u^(lambda-1) e_q(x u) du,
/// the segment form of x^(-lambda) int_0^x t^(lambda-1) e_q(t) dt.
/// Each level is tabulated at Chebyshev points of [0, 1]; the inner integrals
/// use tanh-sinh to tol/p.
EvalResult eval_via_recursion(unsigned p, Complex lambda, Complex x, double tol = 1e-11);

struct HankelContourSpec {
    double epsilon = 1.0;
    double truncation = 30.0;
    int nodes_ray = 128;
    int nodes_circle = 64;
};

/// epsilon = 1 and the smallest T >= max(30, |x|+|lambda|+30) whose
/// discarded ray tail is below tol.
HankelContourSpec default_hankel_contour(Complex s, Complex lambda, Complex x, double tol = default_tol);

/// Hankel loop integral around the negative real axis. For s not a positive
/// integer:   Gamma(1-s)/(2 pi i) int_L z^(s-1) e^(lambda z) e^(x e^z) dz.
/// For s = m in N:  (-1)^m/(2 pi i (m-1)!) int_L z^(m-1) e^(lambda z) e^(x e^z) Log z dz.
/// Node counts double until two refinements agree.
EvalResult eval_hankel(Complex s, Complex lambda, Complex x, const HankelContourSpec& contour,
                       double tol = default_tol);
EvalResult eval_hankel(Complex s, Complex lambda, Complex x, double tol = default_tol);

/// Gamma(1-s)/(2 pi i) int_L z^(s-1) g(z) dz for s not a positive integer.
/// The ray tail is bounded with |g(-r)| <= bound * e^(-rate r).
EvalResult hankel_loop(Complex s, const std::function<Complex(Complex)>& g, double rate, double bound,
                       const HankelContourSpec& contour, double tol = default_tol);

/// Gamma(s) e_s(x, lambda) = int_0^inf u^(s-1) e^(-lambda u) exp(x e^(-u)) du, Re s > 0.
/// With scaled = true returns e^(-x) e_s(x, lambda), which stays finite for large Re x.
EvalResult eval_mellin_route(Complex s, Complex lambda, Complex x, double tol = default_tol,
                             bool scaled = false);

/// e_1(x, lambda) = (-x)^(-lambda) gamma(lambda, -x) for real x < 0.
EvalResult eval_incgamma_route(Complex lambda, double x, double tol = default_tol);

/// e_2(x, 1) = -Ein(-x)/x.
EvalResult eval_ein_route(Complex x);

/// Picks a route by the cancellation the series would suffer: closed form at
/// non-positive integers, the series when |x| <= 6 or when Re x >= 0 and
/// |x| - Re x <= 8, otherwise the Mellin integral (Re s > 0) or the lift
/// e_s(x,l) = l e_{s+1}(x,l) + x e_{s+1}(x,l+1).
EvalResult evaluate(Complex s, Complex lambda, Complex x, double tol = default_tol);

/// e^(-x) e_s(x, lambda), routed like evaluate() but without overflow for large Re x.
EvalResult evaluate_scaled(Complex s, Complex lambda, Complex x, double tol = default_tol);

/// e_s(x, lambda - z) = sum_m (s)_m/m! e_{s+m}(x, lambda) z^m for |z| < |lambda|.
EvalResult taylor_shift(Complex s, Complex lambda, Complex z, Complex x, unsigned terms,
                        double tol = default_tol);

/// sum_{p < terms} e_p(x, lambda) z^p, which tends to e^x + z e_1(x, lambda - z).
Complex generating_sum(Complex lambda, Complex x, Complex z, unsigned terms, double tol = default_tol);

/// Large-lambda expansion e^x sum_{n<=order} C(-s,n) lambda^(-n-s) phi_n(x);
/// abs_err is the magnitude of the first omitted term.
EvalResult asymptotic_lambda(Complex s, Complex lambda, Complex x, unsigned order);

/// Leading large-|x| behaviour: e^x x^(-s) for sign = +1 and
/// Gamma(lambda)/Gamma(s) (log x)^(s-1) x^(-lambda) for e_s(-x, lambda), sign = -1.
Complex asymptotic_x_leading(Complex s, Complex lambda, double x, int sign);

}  // namespace polyexp

#pragma once

// The two-index family
//
//     h_s(x, lambda, w) = sum_{n>=1} x^n/n! sum_{j<n} w^j / (lambda + j)^s,
//
// its integral form, closed forms at s = 1 and s = -p, and Borel probes.

#include "polyexp/types.hpp"

#include <vector>

namespace polyexp {

struct HSeriesParams {
    Complex s;
    Complex lambda = 1.0;
    Complex w = 1.0;
    Complex x;
};

/// Running-prefix summation with a factorial tail bound.
EvalResult h_direct(const HSeriesParams& params, double tol = default_tol);

/// e^(-x) h_s(x, lambda, w), with the weights e^(-x) x^n / n! formed in log space.
EvalResult h_direct_scaled(const HSeriesParams& params, double tol = default_tol);

/// e^x int_0^x e^(-t) e_s(t w, lambda) dt along the segment [0, x].
EvalResult h_quadrature(const HSeriesParams& params, double tol = 1e-11);

/// h_1(x, 1, w) = (e^x / w) (Ein(x) - Ein(x (1 - w))).
Complex h1_closed(Complex w, Complex x);

/// h_(-p)(x, 1, 1) = e^x g_p(x) from the Stirling form of g_p.
Complex h_neg_eval(unsigned p, Complex x);

/// Same value assembled as e^x (phi_p(x) - phi_p(0) + int_0^x phi_p).
Complex h_neg_eval_via_antiderivative(unsigned p, Complex x);

/// h_(-p)(x, 1, -1) = -phi_p(-x) e^(-x) - e^x int_0^x e^(-2t) phi_p(-t) dt for p >= 1,
/// with the integral done exactly.
EvalResult h_neg_alt_eval(unsigned p, double x);

struct BorelPoint {
    double x;
    Complex value;
    Complex target;
    double abs_err;
};

/// e^(-x) h_s(x, lambda, w) on the grid next to its limit: Phi(w, s, lambda)
/// for |w| < 1, zeta(s, lambda) for w = 1 and Re s > 1, eta(s, lambda) for w = -1.
std::vector<BorelPoint> borel_probe(Complex s, Complex lambda, Complex w, const std::vector<double>& x_grid,
                                    double tol = 1e-10);

/// e^x sum_{n<=order} C(-s,n) (int_0^x phi_n) lambda^(-n-s); order <= 10.
EvalResult h_asymptotic_lambda(Complex s, Complex lambda, Complex x, unsigned order);

}  // namespace polyexp

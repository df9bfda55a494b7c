#pragma once

// Laplace and Mellin transforms of the polyexponential: Lerch, Hurwitz,
// Riemann and alternating zeta functions as integrals over (0, inf).

#include "polyexp/types.hpp"

#include <functional>

namespace polyexp {

/// Decay promised by the caller for t >= split:
///     |f(t)| <= scale * t^power * (log t)^log_power * e^(-rate t).
/// rate = 0 declares algebraic decay, which needs power < -1.
struct Envelope {
    double rate = 1.0;
    double power = 0.0;
    double log_power = 0.0;
    double scale = 1.0;
};

struct IntegrandHandle {
    std::function<Complex(double)> f;
    Envelope envelope;
    /// f(t) = O(t^(alpha-1)) as t -> 0.
    double alpha = 1.0;
};

struct QuadratureSpec {
    double target_tol = 1e-10;
    int max_refinements = 12;
    /// <= 0 selects the default split of 10.
    double split_point = 0.0;
};

/// int_0^inf f(t) dt: tanh-sinh on (0, split), Gauss-Kronrod on the tail up to
/// the point where the envelope remainder drops below target_tol / 10. The
/// remainder bound is included in abs_err. Algebraic tails are integrated in
/// the variable v = log t.
EvalResult quad_semiinfinite(const IntegrandHandle& f, const QuadratureSpec& spec);

/// max(10, 5|x| + |lambda|)
double default_split(Complex x, Complex lambda);

/// Phi(x, s, lambda) = int_0^inf e_s(t x, lambda) e^(-t) dt, for |x| < 1, or |x| = 1 with Re s > 1.
EvalResult lerch_phi(Complex x, Complex s, Complex lambda, double tol = 1e-10);

/// sum_n x^n (n + lambda)^(-s) for |x| < 1, with a geometric tail bound.
EvalResult lerch_phi_series(Complex x, Complex s, Complex lambda, double tol = 1e-12);

/// zeta(s, lambda) = int_0^inf e_s(t, lambda) e^(-t) dt, Re s > 1.
EvalResult hurwitz_zeta(Complex s, Complex lambda, double tol = 1e-10);

/// eta(s, lambda) = int_0^inf e_s(-t, lambda) e^(-t) dt for every complex s.
EvalResult eta(Complex s, Complex lambda, double tol = 1e-10);

/// Alternating sum sum_n (-1)^n (n + lambda)^(-s), Re s > 0, with
/// Cohen-Rodriguez Villegas-Zagier acceleration.
EvalResult eta_alternating(Complex s, Complex lambda, int terms = 60);

/// Gamma(1-s)/(2 pi i) int_L z^(s-1) e^(lambda z) / (1 + e^z) dz, s not a positive integer.
EvalResult eta_hankel(Complex s, Complex lambda, double tol = 1e-10);

enum class ZetaRoute { eta, laplace };

/// zeta(s) = eta(s, 1) / (1 - 2^(1-s)), or the Laplace integral of e_s(t, 1) for Re s > 1.
EvalResult riemann_zeta(Complex s, ZetaRoute route = ZetaRoute::eta, double tol = 1e-10);

/// int_0^inf x^(s-1) e_p(-x, lambda) dx for 0 < Re s < Re lambda; equals Gamma(s)/(lambda-s)^p.
EvalResult mellin_transform_polyexp(Complex s, unsigned p, Complex lambda, double tol = 1e-10);

/// int_0^inf x^(lambda-1) e^(-x) Q_p(-x, lambda) dx, which vanishes for p >= 1.
EvalResult vanishing_moment(unsigned p, Complex lambda, double tol = 1e-12);

/// int_0^inf t^(s-1) e^(-lambda t) exp(x e^(-t)) dt = Gamma(s) e_s(x, lambda), Re s > 0.
EvalResult mellin_s_representation(Complex s, Complex lambda, Complex x, double tol = 1e-12);

/// int_0^inf t^(s-1) e^(-lambda t) (e^x - exp(x e^(-t))) / (1 - e^(-t)) dt = Gamma(s) h_s(x, lambda),
/// Re s > 1.
EvalResult h_mellin_representation(Complex s, Complex lambda, double x, double tol = 1e-12);

}  // namespace polyexp

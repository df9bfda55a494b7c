#include "polyexp/transforms.hpp"

#include "polyexp/polyexp.hpp"
#include "polyexp/quadrature.hpp"
#include "polyexp/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polyexp {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

void require_lambda(Complex lambda) {
    if (!(lambda.real() > 0.0)) {
        throw Error(ErrorKind::domain, "needs Re lambda > 0");
    }
}

// scale * t^power * (log t)^log_power * e^(-rate t) integrated over [T, inf),
// valid once the log-derivative of the bound is at most -rate/2.
double exp_remainder(const Envelope& e, double T) {
    const double lt = std::log(T);
    const double drift = std::max(0.0, e.power) / T + std::max(0.0, e.log_power) / (T * lt);
    if (drift > e.rate / 2.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double log_bound = std::log(e.scale) + e.power * lt + e.log_power * std::log(lt) - e.rate * T;
    return std::exp(log_bound) * 2.0 / e.rate;
}

void check_result(const quad::QuadResult& r) {
    if (!r.converged) {
        throw Error(ErrorKind::convergence, "semi-infinite quadrature did not converge");
    }
}

Complex pow_real(double t, Complex a) { return std::exp(a * std::log(t)); }

// Nested e_s calls carry this share of the outer tolerance.
constexpr double nested = 1e-2;

}  // namespace

double default_split(Complex x, Complex lambda) { return std::max(10.0, 5.0 * std::abs(x) + std::abs(lambda)); }

EvalResult quad_semiinfinite(const IntegrandHandle& h, const QuadratureSpec& spec) {
    if (!(spec.target_tol > 0.0)) {
        throw Error(ErrorKind::domain, "quadrature target tolerance must be positive");
    }
    if (spec.max_refinements < 1 || spec.max_refinements > 30) {
        throw Error(ErrorKind::domain, "max_refinements must lie in [1, 30]");
    }
    if (!(h.alpha > 0.0)) {
        throw Error(ErrorKind::domain, "endpoint exponent alpha must be positive");
    }
    const Envelope& env = h.envelope;
    if (env.rate < 0.0 || (env.rate == 0.0 && !(env.power < -1.0))) {
        throw Error(ErrorKind::domain, "integrand envelope is not integrable");
    }
    const double tol = spec.target_tol;
    const double split = spec.split_point > 0.0 ? spec.split_point : 10.0;
    const int levels = std::min(spec.max_refinements, 14);
    const int intervals = 400 * spec.max_refinements;

    const auto core = quad::tanh_sinh(h.f, 0.0, split, tol / 4.0, 1e-15, levels);
    check_result(core);
    Complex value = core.value;
    double err = core.abs_err;
    std::int64_t evals = core.evals;

    if (env.rate > 0.0) {
        double T = std::max(2.0 * split, split + 10.0);
        while (exp_remainder(env, T) > tol / 10.0) {
            T *= 1.2;
            if (T > 1e8) {
                throw Error(ErrorKind::convergence, "envelope remainder does not fall below the target");
            }
        }
        const auto tail = quad::gauss_kronrod(h.f, split, T, tol / 4.0, 1e-15, intervals);
        check_result(tail);
        value += tail.value;
        err += tail.abs_err + exp_remainder(env, T);
        evals += tail.evals;
    } else {
        // t = e^v turns t^power into e^((power+1) v)
        Envelope ev;
        ev.rate = -(env.power + 1.0);
        ev.power = env.log_power;
        ev.log_power = 0.0;
        ev.scale = env.scale;
        const double v0 = std::log(split);
        double V = v0 + 10.0;
        while (exp_remainder(ev, V) > tol / 10.0) {
            V *= 1.2;
            if (V > 700.0) {
                throw Error(ErrorKind::convergence, "algebraic tail does not fall below the target");
            }
        }
        auto g = [&h](double v) {
            const double t = std::exp(v);
            return h.f(t) * t;
        };
        const auto tail = quad::gauss_kronrod(g, v0, V, tol / 4.0, 1e-15, intervals);
        check_result(tail);
        value += tail.value;
        err += tail.abs_err + exp_remainder(ev, V);
        evals += tail.evals;
    }
    return {value, err, evals, Method::quadrature};
}

EvalResult lerch_phi_series(Complex x, Complex s, Complex lambda, double tol) {
    require_lambda(lambda);
    const double ax = std::abs(x);
    if (!(ax < 1.0)) {
        throw Error(ErrorKind::domain, "Lerch series needs |x| < 1");
    }
    const double sigma = s.real();
    const double g = std::exp(std::abs(s.imag()) * pi / 2.0);
    Complex sum = 0.0;
    Complex xn = 1.0;
    double abs_sum = 0.0;
    const std::int64_t cap = series_term_cap() * 100;
    for (std::int64_t n = 0; n < cap; ++n) {
        const double dn = static_cast<double>(n);
        const Complex term = xn * std::exp(-s * std::log(dn + lambda));
        sum += term;
        abs_sum += std::abs(term);
        xn *= x;
        // terms beyond n bounded by |x|^m (m + |lambda|)^(-sigma) g
        const double m = dn + 1.0;
        double ratio = ax;
        double mag;
        if (sigma >= 0.0) {
            mag = std::pow(m + lambda.real(), -sigma);
        } else {
            mag = std::pow(m + std::abs(lambda), -sigma);
            ratio *= std::pow(1.0 + 1.0 / (m + std::abs(lambda)), -sigma);
        }
        if (ratio < 1.0) {
            const double tail = std::abs(xn) * mag * g / (1.0 - ratio);
            if ((tail <= tol && tail <= eps * abs_sum) || tail <= 1e-17 * abs_sum) {
                return {sum, tail + 8.0 * eps * abs_sum, n + 1, Method::series};
            }
        }
    }
    throw Error(ErrorKind::convergence, "Lerch series did not converge");
}

EvalResult lerch_phi(Complex x, Complex s, Complex lambda, double tol) {
    require_lambda(lambda);
    const double ax = std::abs(x);
    if (x == 0.0) {
        return {std::exp(-s * std::log(lambda)), 0.0, 1, Method::closed_form};
    }
    const bool on_circle = std::abs(ax - 1.0) <= 1e-15;
    if (!(ax < 1.0) && !(on_circle && s.real() > 1.0)) {
        throw Error(ErrorKind::domain, "Lerch integral needs |x| < 1, or |x| = 1 with Re s > 1");
    }
    IntegrandHandle h;
    h.f = [=](double t) {
        const Complex tx = t * x;
        const double inner = tol * nested / std::max(1.0, t);
        if (tx.real() > 40.0) {
            return std::exp(t * (x - 1.0)) * evaluate_scaled(s, lambda, tx, inner).value;
        }
        return std::exp(-t) * evaluate(s, lambda, tx, inner).value;
    };
    const double rate = 1.0 - std::max(0.0, x.real());
    const double g = std::exp(std::abs(s.imag()) * pi / 2.0);
    if (rate < 0.05 && s.real() > 1.0) {
        h.envelope = {0.0, -s.real(), 0.0, 4.0 * g * std::pow(std::max(ax, 1e-300), -s.real())};
    } else {
        h.envelope = {rate, std::max(0.0, -s.real()), 0.0,
                      4.0 * g * std::max(1.0, std::abs(std::exp(-s * std::log(lambda))))};
    }
    QuadratureSpec spec;
    spec.target_tol = tol;
    spec.split_point = default_split(x, lambda);
    return quad_semiinfinite(h, spec);
}

EvalResult hurwitz_zeta(Complex s, Complex lambda, double tol) {
    require_lambda(lambda);
    if (!(s.real() > 1.0)) {
        throw Error(ErrorKind::domain, "Hurwitz integral needs Re s > 1");
    }
    IntegrandHandle h;
    h.f = [=](double t) {
        const double inner = tol * nested / std::max(1.0, t);
        return evaluate_scaled(s, lambda, t, inner).value;
    };
    // e^(-t) e_s(t, lambda) ~ t^(-s)
    h.envelope = {0.0, -s.real(), 0.0, 4.0 * std::exp(std::abs(s.imag()) * pi / 2.0)};
    QuadratureSpec spec;
    spec.target_tol = tol;
    spec.split_point = default_split(1.0, lambda);
    return quad_semiinfinite(h, spec);
}

EvalResult eta(Complex s, Complex lambda, double tol) {
    require_lambda(lambda);
    IntegrandHandle h;
    h.f = [=](double t) {
        const double inner = tol * nested / std::max(1.0, t);
        return std::exp(-t) * evaluate(s, lambda, -t, inner).value;
    };
    const double split = default_split(1.0, lambda);
    const double probe = std::abs(evaluate(s, lambda, -split, tol * nested).value);
    const bool negint = is_integer(s) && s.real() <= 0.0;
    h.envelope.rate = 1.0;
    h.envelope.power = negint ? -s.real() : 0.0;
    h.envelope.log_power = std::max(0.0, s.real() - 1.0);
    h.envelope.scale = 4.0 * std::max(1.0, probe);
    if (negint) {
        // e_(-p)(-t) = e^(-t) Q_p(-t): the envelope decays twice as fast
        h.envelope.rate = 2.0;
        h.envelope.scale = 4.0 * std::max(1.0, probe * std::exp(split) / std::pow(split, -s.real()));
    }
    QuadratureSpec spec;
    spec.target_tol = tol;
    spec.split_point = split;
    return quad_semiinfinite(h, spec);
}

EvalResult eta_alternating(Complex s, Complex lambda, int terms) {
    require_lambda(lambda);
    if (!(s.real() > 0.0)) {
        throw Error(ErrorKind::domain, "alternating series needs Re s > 0");
    }
    if (terms < 1 || terms > 120) {
        throw Error(ErrorKind::domain, "alternating series terms must lie in [1, 120]");
    }
    const int n = terms;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    Complex sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::exp(-s * std::log(static_cast<double>(k) + lambda));
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
    }
    const double bound = 3.0 * std::exp(std::abs(s.imag()) * pi / 2.0) / d;
    return {sum / d, bound, n, Method::series};
}

EvalResult eta_hankel(Complex s, Complex lambda, double tol) {
    require_lambda(lambda);
    auto g = [lambda](Complex z) { return std::exp(lambda * z) / (1.0 + std::exp(z)); };
    HankelContourSpec contour;
    contour.epsilon = 1.0;
    contour.truncation = 30.0 + std::log(1.0 / tol) / lambda.real();
    return hankel_loop(s, g, lambda.real(), 2.0, contour, tol);
}

EvalResult riemann_zeta(Complex s, ZetaRoute route, double tol) {
    if (s == 1.0) {
        throw Error(ErrorKind::pole, "zeta has a pole at s = 1");
    }
    if (route == ZetaRoute::laplace) {
        return hurwitz_zeta(s, 1.0, tol);
    }
    const Complex denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
    if (std::abs(denom) < 1e-3) {
        throw Error(ErrorKind::ill_conditioned, "1 - 2^(1-s) is too close to zero");
    }
    const auto e = eta(s, 1.0, tol * std::min(1.0, std::abs(denom)));
    return {e.value / denom, e.abs_err / std::abs(denom), e.work, e.method};
}

EvalResult mellin_transform_polyexp(Complex s, unsigned p, Complex lambda, double tol) {
    require_lambda(lambda);
    if (!(s.real() > 0.0) || !(s.real() < lambda.real())) {
        throw Error(ErrorKind::domain, "Mellin transform needs 0 < Re s < Re lambda");
    }
    const Complex sm1 = s - 1.0;
    const double pd = static_cast<double>(p);
    IntegrandHandle h;
    h.alpha = s.real();
    h.f = [=](double x) {
        const Complex w = pow_real(x, sm1);
        if (p == 0) {
            return w * std::exp(-x);
        }
        const double inner = tol * nested / std::max(1.0, std::abs(w) * x);
        return w * evaluate(pd, lambda, -x, inner).value;
    };
    if (p == 0) {
        h.envelope = {1.0, s.real() - 1.0, 0.0, 1.0};
    } else {
        // e_p(-x, lambda) ~ Gamma(lambda)/Gamma(p) (log x)^(p-1) x^(-lambda)
        const double lead = std::abs(gamma_fn(lambda)) / std::exp(std::lgamma(pd));
        h.envelope = {0.0, s.real() - 1.0 - lambda.real(), pd - 1.0, 8.0 * std::max(1.0, lead)};
    }
    QuadratureSpec spec;
    spec.target_tol = tol;
    spec.split_point = default_split(1.0, lambda);
    return quad_semiinfinite(h, spec);
}

EvalResult vanishing_moment(unsigned p, Complex lambda, double tol) {
    require_lambda(lambda);
    if (p < 1) {
        throw Error(ErrorKind::domain, "vanishing moment needs p >= 1");
    }
    const Complex lm1 = lambda - 1.0;
    IntegrandHandle h;
    h.alpha = lambda.real();
    // e_(-p)(-x) = e^(-x) Q_p(-x, lambda)
    h.f = [=](double x) { return pow_real(x, lm1) * eval_negint(p, lambda, -x); };
    const double split = default_split(1.0, lambda);
    double coeff_scale = 1.0;
    for (unsigned k = 0; k <= p; ++k) {
        coeff_scale *= (std::abs(lambda) + k + 1.0);
    }
    h.envelope = {1.0, lambda.real() - 1.0 + p, 0.0, coeff_scale};
    QuadratureSpec spec;
    spec.target_tol = tol;
    spec.split_point = split;
    return quad_semiinfinite(h, spec);
}

EvalResult mellin_s_representation(Complex s, Complex lambda, Complex x, double tol) {
    require_lambda(lambda);
    if (!(s.real() > 0.0)) {
        throw Error(ErrorKind::domain, "Mellin representation needs Re s > 0");
    }
    const Complex sm1 = s - 1.0;
    IntegrandHandle h;
    h.alpha = s.real();
    h.f = [=](double t) { return std::exp(sm1 * std::log(t) - lambda * t + x * std::exp(-t)); };
    h.envelope = {lambda.real(), s.real() - 1.0, 0.0, 2.0 * std::exp(std::max(0.0, x.real()))};
    QuadratureSpec spec;
    spec.target_tol = tol;
    spec.split_point = default_split(x, lambda);
    return quad_semiinfinite(h, spec);
}

EvalResult h_mellin_representation(Complex s, Complex lambda, double x, double tol) {
    require_lambda(lambda);
    if (!(s.real() > 1.0)) {
        throw Error(ErrorKind::domain, "h Mellin representation needs Re s > 1");
    }
    const Complex sm1 = s - 1.0;
    const double ex = std::exp(x);
    IntegrandHandle h;
    h.alpha = s.real();
    h.f = [=](double t) {
        const double q = -std::expm1(-t);
        double bracket;
        if (t < 1e-3) {
            const double xq = x * q;
            bracket = ex * x * (1.0 - xq / 2.0 + xq * xq / 6.0 - xq * xq * xq / 24.0);
        } else {
            bracket = -ex * std::expm1(-x * q) / q;
        }
        return std::exp(sm1 * std::log(t) - lambda * t) * bracket;
    };
    h.envelope = {lambda.real(), s.real() - 1.0, 0.0, 2.0 * (ex + 2.0)};
    QuadratureSpec spec;
    spec.target_tol = tol;
    spec.split_point = default_split(x, lambda);
    return quad_semiinfinite(h, spec);
}

}  // namespace polyexp

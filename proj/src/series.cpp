#include "polyexp/series.hpp"

#include "polyexp/exact.hpp"
#include "polyexp/polyexp.hpp"
#include "polyexp/quadrature.hpp"
#include "polyexp/special.hpp"
#include "polyexp/transforms.hpp"

#include <cmath>
#include <limits>

namespace polyexp {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

void check_params(const HSeriesParams& p) {
    if (!(p.lambda.real() > 0.0)) {
        throw Error(ErrorKind::domain, "h-series needs Re lambda > 0");
    }
    if (std::abs(p.w) > 1.0 + 1e-15) {
        throw Error(ErrorKind::domain, "h-series needs |w| <= 1");
    }
}

EvalResult h_core(const HSeriesParams& p, double tol, bool scaled) {
    check_params(p);
    if (!(tol > 0.0)) {
        throw Error(ErrorKind::domain, "tolerance must be positive");
    }
    if (p.x == 0.0) {
        return {0.0, 0.0, 0, Method::series};
    }
    const Complex x = p.x;
    const double ax = std::abs(x);
    const double sigma = p.s.real();
    const double al = std::abs(p.lambda);
    const double g = std::exp(std::abs(p.s.imag()) * pi / 2.0);
    // |w^j (lambda+j)^(-s)| <= m_bound(j)
    auto m_bound = [&](double j) {
        return sigma >= 0.0 ? g * std::pow(p.lambda.real() + j, -sigma) : g * std::pow(j + al, -sigma);
    };
    const double m0 = sigma >= 0.0 ? m_bound(0.0) : 0.0;
    const Complex log_x = std::log(x);
    const std::int64_t cap = series_term_cap();

    Complex prefix = 0.0;
    Complex wj = 1.0;
    Complex weight = scaled ? std::exp(-x) : Complex(1.0);
    double log_abs_weight = scaled ? -x.real() : 0.0;
    Complex sum = 0.0;
    double abs_sum = 0.0;
    for (std::int64_t n = 1;; ++n) {
        if (n >= cap) {
            throw Error(ErrorKind::convergence, "h-series exceeded the term cap");
        }
        const double dn = static_cast<double>(n);
        prefix += wj * std::exp(-p.s * std::log(dn - 1.0 + p.lambda));
        wj *= p.w;
        if (scaled) {
            const Complex lw = dn * log_x - std::lgamma(dn + 1.0) - x;
            weight = std::exp(lw);
            log_abs_weight = lw.real();
        } else {
            weight *= x / dn;
            log_abs_weight += std::log(ax / dn);
        }
        const Complex term = weight * prefix;
        if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
            throw Error(ErrorKind::overflow, "h-series term overflows binary64");
        }
        sum += term;
        abs_sum += std::abs(term);

        // |prefix_m| <= m * max_{j<m} m_bound(j)
        const double m = dn + 1.0;
        const double mmax = sigma >= 0.0 ? m0 : m_bound(m);
        double rho = ax / m;
        if (sigma < 0.0) {
            rho *= std::pow(1.0 + 1.0 / (m + al), -sigma);
        }
        if (rho <= 0.5) {
            const double c = std::exp(log_abs_weight + std::log(ax / m)) * m * mmax;
            const double tail = c / (1.0 - rho);
            if ((tail <= tol && tail <= eps * abs_sum) || tail <= 1e-17 * abs_sum) {
                return {sum, tail + 8.0 * eps * abs_sum * std::sqrt(dn), n, Method::series};
            }
        }
    }
}

Complex poly_eval(const exact::ExactPoly& poly, Complex x) { return poly.evaluate(x); }

}  // namespace

EvalResult h_direct(const HSeriesParams& params, double tol) { return h_core(params, tol, false); }

EvalResult h_direct_scaled(const HSeriesParams& params, double tol) { return h_core(params, tol, true); }

EvalResult h_quadrature(const HSeriesParams& params, double tol) {
    check_params(params);
    const Complex x = params.x;
    if (x == 0.0) {
        return {0.0, 0.0, 0, Method::quadrature};
    }
    const double ax = std::abs(x);
    const double inner = tol * 1e-2 / std::max(1.0, ax);
    auto f = [&](double u) {
        const Complex t = x * u;
        return std::exp(-t) * evaluate(params.s, params.lambda, t * params.w, inner).value;
    };
    const auto r = quad::gauss_kronrod(f, 0.0, 1.0, tol / std::max(1.0, ax * std::abs(std::exp(x))), 1e-14);
    if (!r.converged) {
        throw Error(ErrorKind::convergence, "h quadrature did not converge");
    }
    const Complex pre = std::exp(x) * x;
    return {pre * r.value, std::abs(pre) * (r.abs_err + ax * inner), r.evals, Method::quadrature};
}

Complex h1_closed(Complex w, Complex x) {
    if (w == 0.0) {
        throw Error(ErrorKind::domain, "h1 closed form needs w != 0");
    }
    if (x == 0.0) {
        return 0.0;
    }
    return std::exp(x) / w * (ein(x) - ein(x * (1.0 - w)));
}

Complex h_neg_eval(unsigned p, Complex x) { return std::exp(x) * poly_eval(exact::h_neg_closed_poly(p), x); }

Complex h_neg_eval_via_antiderivative(unsigned p, Complex x) {
    return std::exp(x) * poly_eval(exact::h_neg_closed_poly_via_antiderivative(p), x);
}

EvalResult h_neg_alt_eval(unsigned p, double x) {
    if (p < 1) {
        throw Error(ErrorKind::domain, "alternating closed form needs p >= 1; p = 0 carries a boundary term");
    }
    const exact::ExactPoly phi = exact::phi_poly(p);
    const auto [c0, big_c] = exact::exp2_integral_parts(phi);
    const double em = std::exp(-x);
    const double ep = std::exp(x);
    // int_0^x e^(-2t) phi(-t) dt = c0 - e^(-2x) C(x)
    const double phi_mx = poly_eval(phi, -x).real();
    const double cx = poly_eval(big_c, x).real();
    const double c0d = exact::to_double(c0);
    const double value = -phi_mx * em - c0d * ep + em * cx;
    const double mag = std::abs(phi_mx * em) + std::abs(c0d * ep) + std::abs(em * cx);
    return {value, 16.0 * eps * mag, 1, Method::closed_form};
}

std::vector<BorelPoint> borel_probe(Complex s, Complex lambda, Complex w, const std::vector<double>& x_grid,
                                    double tol) {
    if (!(lambda.real() > 0.0)) {
        throw Error(ErrorKind::domain, "Borel probe needs Re lambda > 0");
    }
    EvalResult target;
    if (std::abs(w) < 1.0) {
        target = lerch_phi(w, s, lambda, tol);
    } else if (w == 1.0 && s.real() > 1.0) {
        target = hurwitz_zeta(s, lambda, tol);
    } else if (w == -1.0) {
        target = eta(s, lambda, tol);
    } else {
        throw Error(ErrorKind::domain, "Borel target is undefined for this w and s");
    }
    std::vector<BorelPoint> out;
    double last = 0.0;
    for (double x : x_grid) {
        if (!(x > 0.0) || x > 700.0) {
            throw Error(ErrorKind::domain, "Borel grid points must lie in (0, 700]");
        }
        if (x < last) {
            throw Error(ErrorKind::domain, "Borel grid must be ascending");
        }
        last = x;
        const auto h = h_direct_scaled({s, lambda, w, x}, tol);
        out.push_back({x, h.value, target.value, h.abs_err + target.abs_err});
    }
    return out;
}

EvalResult h_asymptotic_lambda(Complex s, Complex lambda, Complex x, unsigned order) {
    if (order > 10) {
        throw Error(ErrorKind::domain, "asymptotic order must be <= 10");
    }
    const Complex ex = std::exp(x);
    const Complex log_lambda = std::log(lambda);
    Complex binom = 1.0;
    Complex sum = 0.0;
    double omitted = 0.0;
    for (unsigned n = 0; n <= order + 1; ++n) {
        if (n > 0) {
            binom *= (-s - static_cast<double>(n - 1)) / static_cast<double>(n);
        }
        const Complex term = binom * std::exp((-static_cast<double>(n) - s) * log_lambda) *
                             poly_eval(exact::phi_antiderivative(n), x);
        if (n <= order) {
            sum += term;
        } else {
            omitted = std::abs(ex * term);
        }
    }
    return {ex * sum, omitted, static_cast<std::int64_t>(order) + 1, Method::asymptotic};
}

}  // namespace polyexp

#include "polyexp/checks.hpp"

#include "polyexp/exact.hpp"
#include "polyexp/format.hpp"
#include "polyexp/mellin.hpp"
#include "polyexp/polyexp.hpp"
#include "polyexp/series.hpp"
#include "polyexp/special.hpp"
#include "polyexp/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

namespace polyexp::checks {

namespace {

using exact::BigRational;
using exact::ExactPoly;

class Recorder {
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void exact(const std::string& name, int mismatches) {
        out_.push_back({suite_, name, mismatches == 0, static_cast<double>(mismatches), 0.0});
    }

    void numeric(const std::string& name, double discrepancy, double tolerance) {
        out_.push_back({suite_, name, std::isfinite(discrepancy) && discrepancy <= tolerance, discrepancy, tolerance});
    }

    /// Records a failure when the check itself throws.
    void guarded(const std::string& name, double tolerance, const std::function<double()>& f) {
        try {
            numeric(name, f(), tolerance);
        } catch (const std::exception&) {
            out_.push_back({suite_, name + " (error)", false, std::numeric_limits<double>::infinity(), tolerance});
        }
    }

    std::vector<CheckRecord> take() { return std::move(out_); }

private:
    std::string suite_;
    std::vector<CheckRecord> out_;
};

double rel(Complex a, Complex b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

/// Relative above 1, absolute below.
double mixed(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string num(Complex z) {
    if (z.imag() == 0.0) {
        return num(z.real());
    }
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

ExactPoly x_poly() { return ExactPoly::monomial(1, 1); }

BigRational inv_factorial(unsigned n) { return BigRational(1) / BigRational(exact::factorial(n)); }

// ---------------------------------------------------------------- exact

/// [t^n] exp(x (e^t - 1)) for n <= order by composing truncated power series.
std::vector<ExactPoly> exp_composition(unsigned order) {
    using Series = std::vector<ExactPoly>;
    Series u(order + 1);
    for (unsigned k = 1; k <= order; ++k) {
        u[k] = ExactPoly::constant(inv_factorial(k));
    }
    auto mul = [order](const Series& a, const Series& b) {
        Series c(order + 1);
        for (unsigned i = 0; i <= order; ++i) {
            if (a[i].is_zero()) {
                continue;
            }
            for (unsigned j = 0; i + j <= order; ++j) {
                if (!b[j].is_zero()) {
                    c[i + j] += a[i] * b[j];
                }
            }
        }
        return c;
    };
    Series result(order + 1);
    Series power(order + 1);
    power[0] = ExactPoly::constant(1);
    for (unsigned j = 0; j <= order; ++j) {
        const ExactPoly w = ExactPoly::monomial(inv_factorial(j), j);
        for (unsigned n = 0; n <= order; ++n) {
            if (!power[n].is_zero()) {
                result[n] += w * power[n];
            }
        }
        power = mul(power, u);
    }
    return result;
}

std::vector<CheckRecord> exact_suite() {
    Recorder r("exact");
    const ExactPoly x = x_poly();

    {
        int bad = 0;
        bad += exact::phi_poly(0) != ExactPoly::constant(1);
        bad += exact::phi_poly(1) != x;
        bad += exact::phi_poly(2) != x + x * x;
        bad += exact::phi_poly(3) != x + BigRational(3) * x * x + x * x * x;
        r.exact("phi table n<=3", bad);
    }
    {
        int bad = 0;
        for (unsigned n = 0; n <= 20; ++n) {
            const ExactPoly p = exact::phi_poly(n);
            bad += exact::phi_poly(n + 1) != x * (p.derivative() + p);
        }
        r.exact("phi_(n+1) = x (phi_n' + phi_n), n<=20", bad);
    }
    {
        int bad = 0;
        for (unsigned n = 0; n <= 15; ++n) {
            ExactPoly acc;
            for (unsigned k = 0; k <= n; ++k) {
                acc += BigRational(exact::binomial(n, k)) * exact::phi_poly(k);
            }
            bad += exact::phi_poly(n + 1) != x * acc;
        }
        r.exact("phi_(n+1) = x sum C(n,k) phi_k, n<=15", bad);
    }
    {
        int bad = 0;
        for (unsigned n = 0; n <= 15; ++n) {
            ExactPoly acc;
            for (unsigned k = 0; k < n; ++k) {
                acc += BigRational(exact::binomial(n, k)) * exact::phi_poly(k);
            }
            bad += exact::phi_poly(n).derivative() != acc;
        }
        r.exact("phi_n' = sum_(k<n) C(n,k) phi_k, n<=15", bad);
    }
    {
        const auto coeffs = exp_composition(12);
        int bad = 0;
        for (unsigned n = 0; n <= 12; ++n) {
            bad += coeffs[n] * BigRational(exact::factorial(n)) != exact::phi_poly(n);
        }
        r.exact("exp(x(e^t - 1)) generating function, order 12", bad);
    }
    {
        auto q = [](std::vector<std::vector<long>> rows) {
            std::vector<std::vector<BigRational>> c;
            for (const auto& row : rows) {
                c.emplace_back(row.begin(), row.end());
            }
            return exact::BivariatePoly(std::move(c));
        };
        // rows: power of x, columns: power of lambda
        int bad = 0;
        bad += exact::q_poly(0) != q({{1}});
        bad += exact::q_poly(1) != q({{0, 1}, {1, 0}});
        bad += exact::q_poly(2) != q({{0, 0, 1}, {1, 2, 0}, {1, 0, 0}});
        bad += exact::q_poly(3) != q({{0, 0, 0, 1}, {1, 3, 3, 0}, {3, 3, 0, 0}, {1, 0, 0, 0}});
        r.exact("Q_p table p<=3", bad);
    }
    {
        int bad = 0;
        for (unsigned p = 0; p <= 12; ++p) {
            const auto shifted = exact::divmod(exact::phi_poly(p + 1), x);
            bad += !shifted.second.is_zero() || exact::q_poly(p).at_lambda(1) != shifted.first;
        }
        r.exact("Q_p(x, 1) = phi_(p+1)(x) / x, p<=12", bad);
    }
    {
        int bad = 0;
        for (unsigned p = 0; p <= 15; ++p) {
            bad += exact::exp_moment(p) != exact::exp_moment_stirling(p);
        }
        r.exact("Bernoulli moment equals Stirling-weighted sum, p<=15", bad);
    }
    {
        int bad = 0;
        for (unsigned p = 0; p <= 12; ++p) {
            bad += exact::phi_antiderivative(p) != exact::phi_antiderivative_bernoulli(p);
        }
        r.exact("int_0^x phi_p = Bernoulli combination of phi_k, p<=12", bad);
    }
    {
        int bad = 0;
        for (unsigned p = 0; p <= 10; ++p) {
            const ExactPoly f = exact::faulhaber_poly(p);
            for (unsigned n = 1; n <= 10; ++n) {
                BigRational brute = 0;
                // 0^0 = 1
                for (unsigned j = 0; j < n; ++j) {
                    BigRational t = 1;
                    for (unsigned e = 0; e < p; ++e) {
                        t *= j;
                    }
                    brute += t;
                }
                bad += f(BigRational(n)) != brute;
            }
        }
        r.exact("Faulhaber polynomial vs brute-force power sums, p<=10", bad);
    }
    {
        int bad = 0;
        for (unsigned p = 0; p <= 10; ++p) {
            const ExactPoly e = exact::euler_poly(p);
            const ExactPoly shifted = e.compose_linear(1, 1);
            bad += e + shifted != ExactPoly::monomial(2, p);
        }
        r.exact("E_p(l) + E_p(l+1) = 2 l^p, p<=10", bad);
    }
    {
        int bad = 0;
        for (unsigned p = 0; p <= 10; ++p) {
            ExactPoly rhs = ExactPoly::monomial(BigRational(1, 2), p);
            for (unsigned k = 1; k <= p; ++k) {
                rhs -= ExactPoly::monomial(BigRational(exact::binomial(p, k)) * -exact::exp_moment(k), p - k);
            }
            bad += exact::eta_neg_poly(p) != rhs;
            bad += exact::eta_neg_poly(p) * BigRational(2) != exact::euler_poly(p);
        }
        r.exact("eta(-p, l) recurrence with +eta(0) l^p and E_p(l)/2, p<=10", bad);
    }
    {
        int bad = 0;
        bad += exact::zeta_neg_int(0) != BigRational(-1, 2);
        for (unsigned p = 1; p <= 12; ++p) {
            // zeta(-p) = eta(-p) / (1 - 2^(p+1))
            BigRational two = 1;
            for (unsigned e = 0; e <= p; ++e) {
                two *= 2;
            }
            bad += exact::zeta_neg_int(p) != exact::eta_neg_int(p) / (1 - two);
        }
        r.exact("zeta(-p) = eta(-p) / (1 - 2^(p+1)), p<=12", bad);
    }
    {
        const ExactPoly g3 = ExactPoly({0, 1, BigRational(7, 2), 2, BigRational(1, 4)});
        int bad = exact::h_neg_closed_poly(3) != g3;
        for (unsigned p = 0; p <= 12; ++p) {
            bad += exact::h_neg_closed_poly(p) != exact::h_neg_closed_poly_via_antiderivative(p);
        }
        r.exact("sum of power sums closed form, cubic table and p<=12", bad);
    }
    return r.take();
}

// ---------------------------------------------------------------- routes

struct Route {
    std::string name;
    EvalResult result;
};

std::vector<CheckRecord> routes_suite() {
    Recorder r("routes");
    const std::vector<Complex> s_grid = {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, Complex(2.5, 0.5)};
    const std::vector<Complex> l_grid = {1.0, 1.7, Complex(0.5, 0.5)};
    const std::vector<double> x_grid = {-2.0, -0.5, 0.0, 0.5, 1.0, 3.0};
    constexpr double tol = 1e-7;

    for (Complex s : s_grid) {
        for (Complex lambda : l_grid) {
            for (double x : x_grid) {
                const std::string cell = "s=" + num(s) + " lambda=" + num(lambda) + " x=" + num(x);
                std::vector<Route> routes;
                auto add = [&](const std::string& name, const std::function<EvalResult()>& f) {
                    try {
                        routes.push_back({name, f()});
                    } catch (const std::exception&) {
                        r.numeric(cell + " " + name + " (error)", std::numeric_limits<double>::infinity(), tol);
                    }
                };
                add("series", [&] { return eval_series(s, lambda, x); });
                add("hankel", [&] { return eval_hankel(s, lambda, x); });
                if (is_integer(s) && s.real() <= 0.0) {
                    const auto p = static_cast<unsigned>(-s.real());
                    add("negint", [&] { return EvalResult{eval_negint(p, lambda, x), 0.0, 1, Method::closed_form}; });
                }
                if (is_integer(s) && s.real() >= 1.0) {
                    add("recursion", [&] { return eval_via_recursion(static_cast<unsigned>(s.real()), lambda, x); });
                }
                if (s == 1.0 && x <= 0.0) {
                    add("incgamma", [&] { return eval_incgamma_route(lambda, x); });
                }
                if (s == 2.0 && lambda == 1.0) {
                    add("ein", [&] { return eval_ein_route(x); });
                }
                if (x == 0.0) {
                    add("lambda^-s", [&] { return EvalResult{std::exp(-s * std::log(lambda)), 0.0, 0, Method::closed_form}; });
                }
                for (std::size_t i = 0; i < routes.size(); ++i) {
                    for (std::size_t j = i + 1; j < routes.size(); ++j) {
                        r.numeric(cell + " " + routes[i].name + "~" + routes[j].name,
                                  rel(routes[i].result.value, routes[j].result.value), tol);
                    }
                }
            }
        }
    }

    for (double lambda : {0.5, 1.0, 2.5}) {
        for (double x : {0.1, 1.0, 5.0}) {
            r.guarded("x^l e_1(-x, l) = lower gamma, l=" + num(lambda) + " x=" + num(x), 1e-9, [&] {
                const Complex lhs = std::pow(x, lambda) * evaluate(1.0, lambda, -x).value;
                return rel(lhs, lower_inc_gamma(lambda, x).value);
            });
        }
    }

    for (unsigned p = 0; p <= 2; ++p) {
        for (double lambda : {1.0, 1.5}) {
            for (double x : {0.5, 1.0}) {
                r.guarded("(d/dx x) x^(l-1) e_(p+1) = x^(l-1) e_p, p=" + std::to_string(p) + " l=" + num(lambda) +
                              " x=" + num(x),
                          1e-5, [&] {
                              constexpr double h = 1e-5;
                              auto g = [&](double t) { return std::pow(t, lambda) * evaluate(p + 1.0, lambda, t).value; };
                              const Complex lhs = (g(x + h) - g(x - h)) / (2.0 * h);
                              const Complex rhs = std::pow(x, lambda - 1.0) * evaluate(double(p), lambda, x).value;
                              return std::abs(lhs - rhs);
                          });
            }
        }
    }

    for (unsigned p = 1; p <= 6; ++p) {
        for (double x : {-1.0, 1.0, 2.0}) {
            r.guarded("phi_p(x) = x e^(-x) e_(1-p)(x), p=" + std::to_string(p) + " x=" + num(x), 1e-12, [&] {
                const Complex lhs = exact::phi_poly(p).evaluate(x);
                const Complex rhs = x * std::exp(-x) * evaluate(1.0 - p, 1.0, x).value;
                return rel(lhs, rhs);
            });
        }
    }

    // Taylor shift and the generating identity, with geometric decay in the order.
    struct ShiftCase {
        Complex s, lambda, z, x;
    };
    for (const ShiftCase& c : {ShiftCase{1.0, 2.0, 1.0, 1.0}, ShiftCase{2.0, 1.7, 0.8, -0.5},
                               ShiftCase{0.5, Complex(1.0, 0.5), Complex(0.3, 0.4), 1.0},
                               ShiftCase{-1.0, 1.5, 0.5, 2.0}}) {
        const std::string tag = "s=" + num(c.s) + " lambda=" + num(c.lambda) + " z=" + num(c.z) + " x=" + num(c.x);
        r.guarded("taylor shift " + tag, 1e-8, [&] {
            const Complex target = eval_series(c.s, c.lambda - c.z, c.x).value;
            return rel(taylor_shift(c.s, c.lambda, c.z, c.x, 200).value, target);
        });
        r.guarded("taylor shift decay " + tag, 0.0, [&] {
            const Complex target = eval_series(c.s, c.lambda - c.z, c.x).value;
            const double e10 = std::abs(taylor_shift(c.s, c.lambda, c.z, c.x, 10).value - target);
            const double e20 = std::abs(taylor_shift(c.s, c.lambda, c.z, c.x, 20).value - target);
            const double q = std::abs(c.z) / std::abs(c.lambda);
            // e20 / e10 should follow q^10 up to a polynomial factor
            return e20 <= std::max(e10 * std::pow(q, 10.0) * 50.0, 1e-13 * std::abs(target)) ? 0.0 : e20 / e10;
        });
    }
    struct GenCase {
        Complex lambda, x, z;
    };
    for (const GenCase& c : {GenCase{2.0, 1.0, 1.0}, GenCase{1.0, 1.0, 0.5}, GenCase{1.7, -2.0, Complex(0.2, 0.6)}}) {
        const std::string tag = "lambda=" + num(c.lambda) + " x=" + num(c.x) + " z=" + num(c.z);
        const Complex target = std::exp(c.x) + c.z * eval_series(1.0, c.lambda - c.z, c.x).value;
        r.guarded("generating sum " + tag, 1e-8, [&] { return rel(generating_sum(c.lambda, c.x, c.z, 80), target); });
        r.guarded("generating sum decay " + tag, 0.0, [&] {
            const double e10 = std::abs(generating_sum(c.lambda, c.x, c.z, 10) - target);
            const double e20 = std::abs(generating_sum(c.lambda, c.x, c.z, 20) - target);
            const double q = std::abs(c.z) / std::abs(c.lambda);
            return e20 <= std::max(e10 * std::pow(q, 10.0) * 50.0, 1e-13) ? 0.0 : e20 / e10;
        });
    }

    {
        const Complex series = eval_series(2.0, 40.0, 1.0).value;
        for (unsigned order = 0; order <= 4; ++order) {
            const auto a = asymptotic_lambda(2.0, 40.0, 1.0, order);
            r.numeric("large-lambda expansion s=2 lambda=40 x=1 order " + std::to_string(order),
                      std::abs(a.value - series) / a.abs_err, 1.0);
        }
    }
    r.guarded("large-x leading term e_1(-x) at x=20", 0.15, [] {
        const Complex lead = asymptotic_x_leading(1.0, 1.0, 20.0, -1);
        return std::abs(lead / evaluate(1.0, 1.0, -20.0).value - 1.0);
    });
    r.guarded("large-x leading ratio trend s=2 x=10,20,40", 0.0, [] {
        double last = std::numeric_limits<double>::infinity();
        for (double x : {10.0, 20.0, 40.0}) {
            const double d = std::abs(evaluate(2.0, 1.0, x).value / asymptotic_x_leading(2.0, 1.0, x, 1) - 1.0);
            if (!(d < last)) {
                return 1.0;
            }
            last = d;
        }
        return 0.0;
    });
    return r.take();
}

// ---------------------------------------------------------------- transforms

std::vector<CheckRecord> transforms_suite() {
    Recorder r("transforms");
    r.guarded("zeta(2) by the Laplace route", 1e-8,
              [] { return std::abs(riemann_zeta(2.0, ZetaRoute::laplace).value - pi * pi / 6.0); });
    r.guarded("zeta(-1) by the eta route", 1e-9,
              [] { return std::abs(riemann_zeta(-1.0, ZetaRoute::eta).value + 1.0 / 12.0); });
    r.guarded("zeta(0)", 1e-9, [] { return std::abs(riemann_zeta(0.0, ZetaRoute::eta).value + 0.5); });
    for (double s : {2.0, 3.0, 4.5}) {
        r.guarded("zeta routes agree s=" + num(s), 1e-8, [s] {
            return std::abs(riemann_zeta(s, ZetaRoute::laplace).value - riemann_zeta(s, ZetaRoute::eta).value);
        });
    }
    for (unsigned p = 0; p <= 4; ++p) {
        for (double lambda : {1.0, 2.5}) {
            r.guarded("eta(-p, l) = E_p(l)/2, p=" + std::to_string(p) + " l=" + num(lambda), 1e-7, [&] {
                const double e = exact::to_double(exact::euler_poly(p)(BigRational(lambda)));
                return std::abs(eta(-double(p), lambda).value - e / 2.0);
            });
        }
    }
    for (double s : {0.3, 1.0, 2.3}) {
        for (double lambda : {1.0, 1.7}) {
            r.guarded("eta integral vs accelerated series s=" + num(s) + " l=" + num(lambda), 1e-7,
                      [&] { return rel(eta(s, lambda).value, eta_alternating(s, lambda).value); });
        }
    }
    r.guarded("eta integral vs Hankel loop s=1/2 l=1", 1e-6,
              [] { return std::abs(eta(0.5, 1.0).value - eta_hankel(0.5, 1.0).value); });
    for (Complex s : {Complex(2.0), Complex(3.5), Complex(2.0, 1.0)}) {
        for (double lambda : {1.0, 0.5}) {
            r.guarded("Lerch at x=1 equals Hurwitz s=" + num(s) + " l=" + num(lambda), 1e-8,
                      [&] { return rel(lerch_phi(1.0, s, lambda).value, hurwitz_zeta(s, lambda).value); });
        }
    }
    for (Complex x : {Complex(0.5), Complex(-0.7), Complex(0.3, 0.6)}) {
        r.guarded("Lerch integral vs direct series x=" + num(x), 1e-9,
                  [&] { return rel(lerch_phi(x, 2.0, 1.5).value, lerch_phi_series(x, 2.0, 1.5).value); });
    }
    for (unsigned p = 0; p <= 4; ++p) {
        r.guarded("int e_p(-x) x^(-1/2) dx = 2^p sqrt(pi), p=" + std::to_string(p), 1e-6, [p] {
            return std::abs(mellin_transform_polyexp(0.5, p, 1.0).value - std::ldexp(std::sqrt(pi), int(p)));
        });
    }
    for (unsigned p = 1; p <= 4; ++p) {
        for (double lambda : {1.0, 1.5, 2.3}) {
            r.guarded("vanishing moment p=" + std::to_string(p) + " l=" + num(lambda), 1e-8,
                      [&] { return std::abs(vanishing_moment(p, lambda).value); });
        }
    }
    struct MCase {
        double s, lambda, x;
    };
    for (const MCase& c : {MCase{1.0, 1.0, 0.0}, MCase{2.5, 1.0, 1.0}, MCase{2.0, 1.5, -1.0}}) {
        r.guarded("Gamma(s) e_s(-x, l) as a Mellin integral s=" + num(c.s) + " l=" + num(c.lambda) +
                      " x=" + num(c.x),
                  1e-9, [&] {
                      const Complex want = gamma_fn(c.s) * eval_series(c.s, c.lambda, c.x).value;
                      return rel(mellin_s_representation(c.s, c.lambda, c.x).value, want);
                  });
    }
    for (const MCase& c : {MCase{2.0, 1.0, 1.0}, MCase{3.0, 2.0, -1.0}}) {
        r.guarded("Gamma(s) h_s(x, l) as a Mellin integral s=" + num(c.s) + " l=" + num(c.lambda) +
                      " x=" + num(c.x),
                  1e-9, [&] {
                      const Complex want = gamma_fn(c.s) * h_direct({c.s, c.lambda, 1.0, c.x}).value;
                      return rel(h_mellin_representation(c.s, c.lambda, c.x).value, want);
                  });
    }
    return r.take();
}

// ---------------------------------------------------------------- mellin

std::vector<CheckRecord> mellin_suite() {
    using namespace polyexp::mellin;
    Recorder r("mellin");
    const std::vector<std::string> cases = {"1/(2-s)", "1/(2-s)^2", "s^2", "(s^2+1)/((2-s)*(3-s)^2)", "1+1/(4-s)"};
    for (const std::string& text : cases) {
        const RationalFunction rf = parse_rational(text);
        for (double x : {0.5, 1.0, 2.0}) {
            r.guarded("round trip R=" + text + " x=" + num(x), 1e-6, [&] {
                const auto e = eval_theorem63(rf, 1.0);
                const double t = line_integral_height(rf, x, 1.0);
                return std::abs(eval_expression(e, x).value - oracle_line_integral(rf, x, 1.0, t).value);
            });
        }
    }
    {
        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        const std::vector<std::string> more = {"(s^3-2*s+5)/((1.5-s)*(s^2-6*s+13))", "7/((2-s)^3*(5-s))"};
        std::vector<std::string> all = cases;
        all.insert(all.end(), more.begin(), more.end());
        for (const std::string& text : all) {
            r.guarded("partial fractions reassemble R=" + text, 1e-10, [&] {
                const RationalFunction rf = parse_rational(text);
                const PartialFractions pf = partial_fractions(rf);
                double worst = 0.0;
                for (int k = 0; k < 20; ++k) {
                    const Complex s(u(rng), u(rng));
                    worst = std::max(worst, rel(pf(s), rf(s)));
                }
                return worst;
            });
        }
    }
    for (double x : {0.5, 1.0, 2.0}) {
        r.guarded("R=1 gives e^(-x), x=" + num(x), 1e-14, [x] {
            const auto e = eval_theorem63(parse_rational("1"), 1.0);
            return std::abs(eval_expression(e, x).value - std::exp(-x));
        });
    }
    r.guarded("linearity 2 R1 - 3 R2 at x=1", 1e-10, [] {
        const RationalFunction r1 = parse_rational("1/(2-s)");
        const RationalFunction r2 = parse_rational("s/(3-s)^2");
        const RationalFunction combo = parse_rational("2/(2-s) - 3*s/(3-s)^2");
        const double a = eval_expression(eval_theorem63(r1, 1.0), 1.0).value.real();
        const double b = eval_expression(eval_theorem63(r2, 1.0), 1.0).value.real();
        return std::abs(eval_expression(eval_theorem63(combo, 1.0), 1.0).value.real() - (2.0 * a - 3.0 * b));
    });
    for (unsigned k = 1; k <= 2; ++k) {
        r.guarded("(-s)^k matches k Euler-operator steps on e^(-x), k=" + std::to_string(k), 1e-4, [k] {
            const RationalFunction rf = parse_rational(k == 1 ? "-s" : "s^2");
            const double x = 1.3;
            constexpr double h = 1e-3;
            std::function<double(double)> f = [](double t) { return std::exp(-t); };
            for (unsigned j = 0; j < k; ++j) {
                f = [g = f, h](double t) { return t * (g(t + h) - g(t - h)) / (2.0 * h); };
            }
            return std::abs(eval_expression(eval_theorem63(rf, 1.0), x).value.real() - f(x));
        });
    }
    for (double x : {0.5, 1.0, 2.0}) {
        r.guarded("moved line with residue R=1/(1-s) c 2 -> 0.5, x=" + num(x), 1e-6, [x] {
            const RationalFunction rf = parse_rational("1/(1-s)");
            const auto e = shift_adjust(rf, 2.0, 0.5);
            const double t = line_integral_height(rf, x, 2.0);
            return std::abs(eval_expression(e, x).value - oracle_line_integral(rf, x, 2.0, t).value);
        });
    }
    return r.take();
}

// ---------------------------------------------------------------- series

std::vector<CheckRecord> series_suite() {
    Recorder r("series");
    for (double s : {1.0, 2.0, -2.0}) {
        for (double lambda : {1.0, 1.5}) {
            for (double w : {1.0, -1.0, 0.5}) {
                for (double x : {0.5, 1.0, 2.0}) {
                    const HSeriesParams p{s, lambda, w, x};
                    r.guarded("h direct vs quadrature s=" + num(s) + " l=" + num(lambda) + " w=" + num(w) +
                                  " x=" + num(x),
                              1e-8, [&] { return mixed(h_direct(p).value, h_quadrature(p).value); });
                }
            }
        }
    }
    {
        const ExactPoly x = x_poly();
        const ExactPoly want = BigRational(1, 4) * x *
                               (x * x * x + BigRational(8) * x * x + BigRational(14) * x + ExactPoly::constant(4));
        r.exact("h_(-3)(x) = (1/4) x e^x (x^3 + 8x^2 + 14x + 4)", exact::h_neg_closed_poly(3) != want);
        r.guarded("h_(-3)(1) = 27e/4", 1e-14,
                  [] { return rel(h_neg_eval(3, 1.0), 27.0 * std::exp(1.0) / 4.0); });
    }
    for (unsigned p = 0; p <= 5; ++p) {
        for (double x : {0.5, 1.0, -1.5}) {
            r.guarded("power-sum generating function vs direct p=" + std::to_string(p) + " x=" + num(x), 1e-10,
                      [&] { return rel(h_neg_eval(p, x), h_direct({-double(p), 1.0, 1.0, x}).value); });
        }
    }
    for (double w : {1.0, -1.0, 0.5}) {
        for (double x : {0.5, 1.0, 2.0}) {
            r.guarded("h_1 Ein form vs direct w=" + num(w) + " x=" + num(x), 1e-9,
                      [&] { return rel(h1_closed(w, x), h_direct({1.0, 1.0, w, x}).value); });
        }
    }
    r.guarded("h_1 Ein form vs direct w=i x=1", 1e-9, [] {
        const Complex w(0.0, 1.0);
        return rel(h1_closed(w, 1.0), h_direct({1.0, 1.0, w, 1.0}).value);
    });
    for (unsigned p = 1; p <= 3; ++p) {
        for (double x : {0.5, 1.0}) {
            r.guarded("alternating power sums closed form p=" + std::to_string(p) + " x=" + num(x), 1e-9,
                      [&] { return rel(h_neg_alt_eval(p, x).value, h_direct({-double(p), 1.0, -1.0, x}).value); });
        }
    }
    r.guarded("Borel means of zeta(2) strictly improve, x=10,20,40", 0.05, [] {
        const auto pts = borel_probe(2.0, 1.0, 1.0, {10.0, 20.0, 40.0});
        double last = std::numeric_limits<double>::infinity();
        for (const auto& pt : pts) {
            const double d = std::abs(pt.value - pi * pi / 6.0);
            if (!(d < last)) {
                return std::numeric_limits<double>::infinity();
            }
            last = d;
        }
        return last;
    });
    r.guarded("Borel means of eta(1/2) at x=40", 1e-6, [] {
        const auto pts = borel_probe(0.5, 1.0, -1.0, {40.0});
        return std::abs(pts.back().value - pts.back().target);
    });
    r.guarded("Borel means of Lerch(1/2, 2, 1) at x=40", 1e-8, [] {
        const auto pts = borel_probe(2.0, 1.0, 0.5, {40.0});
        return std::abs(pts.back().value - pts.back().target);
    });
    {
        const Complex direct = h_direct({2.0, 40.0, 1.0, 1.0}).value;
        for (unsigned order = 0; order <= 4; ++order) {
            const auto a = h_asymptotic_lambda(2.0, 40.0, 1.0, order);
            r.numeric("h large-lambda expansion s=2 l=40 x=1 order " + std::to_string(order),
                      std::abs(a.value - direct) / a.abs_err, 1.0);
        }
    }
    {
        const std::vector<HSeriesParams> pts = {{2.0, 1.0, 1.0, 0.5}, {1.0, 1.5, -1.0, 1.0}, {-2.0, 1.0, 0.5, 2.0},
                                                {0.5, 2.0, 1.0, -1.0}, {3.0, 1.0, -1.0, 0.3}, {2.0, 1.0, 0.5, 1.5}};
        for (const auto& p : pts) {
            r.guarded("h' - h = e_s(x w, l) s=" + num(p.s) + " l=" + num(p.lambda) + " w=" + num(p.w) +
                          " x=" + num(p.x),
                      1e-5, [&] {
                          constexpr double h = 1e-5;
                          HSeriesParams lo = p;
                          HSeriesParams hi = p;
                          lo.x -= h;
                          hi.x += h;
                          const Complex d = (h_direct(hi).value - h_direct(lo).value) / (2.0 * h);
                          return std::abs(d - h_direct(p).value - eval_series(p.s, p.lambda, p.x * p.w).value);
                      });
        }
    }
    return r.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"exact", "routes", "transforms", "mellin", "series"};
    return names;
}

std::vector<CheckRecord> run_suite(std::string_view name) {
    if (name == "exact") {
        return exact_suite();
    }
    if (name == "routes") {
        return routes_suite();
    }
    if (name == "transforms") {
        return transforms_suite();
    }
    if (name == "mellin") {
        return mellin_suite();
    }
    if (name == "series") {
        return series_suite();
    }
    if (name == "all") {
        std::vector<CheckRecord> out;
        for (const auto& n : suite_names()) {
            auto part = run_suite(n);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw Error(ErrorKind::domain, "unknown suite '" + std::string(name) + "'");
}

bool all_passed(const std::vector<CheckRecord>& records) {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& c) { return c.passed; });
}

std::string to_json(std::string_view suite, const std::vector<CheckRecord>& records) {
    std::size_t failures = 0;
    std::string body;
    for (const auto& c : records) {
        failures += !c.passed;
        if (!body.empty()) {
            body += ", ";
        }
        body += "{\"suite\": " + json_quote(c.suite) + ", \"name\": " + json_quote(c.name) +
                ", \"passed\": " + (c.passed ? "true" : "false") + ", \"discrepancy\": " + format_double(c.discrepancy) +
                ", \"tolerance\": " + format_double(c.tolerance) + "}";
    }
    return "{\"suite\": " + json_quote(suite) + ", \"passed\": " + (failures == 0 ? "true" : "false") +
           ", \"failures\": " + std::to_string(failures) + ", \"checks\": [" + body + "]}";
}

}  // namespace polyexp::checks

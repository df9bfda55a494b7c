#include "polyexp/polyexp.hpp"

#include "polyexp/exact.hpp"
#include "polyexp/quadrature.hpp"
#include "polyexp/special.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <vector>

namespace polyexp {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
const Complex I(0.0, 1.0);

std::atomic<std::int64_t> term_cap{10000};

void require_lambda(Complex lambda) {
    if (!(lambda.real() > 0.0)) {
        throw Error(ErrorKind::domain, "polyexponential needs Re lambda > 0");
    }
}

void require_tol(double tol) {
    if (!(tol > 0.0)) {
        throw Error(ErrorKind::domain, "tolerance must be positive");
    }
}

// Q_p coefficients as doubles, keyed by p; rows are powers of x.
const std::vector<std::vector<double>>& q_table(unsigned p) {
    static std::mutex mutex;
    static std::map<unsigned, std::vector<std::vector<double>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(p);
    if (it == cache.end()) {
        const auto q = exact::q_poly(p);
        std::vector<std::vector<double>> rows;
        for (const auto& row : q.coefficients()) {
            std::vector<double> r;
            for (const auto& c : row) {
                r.push_back(exact::to_double(c));
            }
            rows.push_back(std::move(r));
        }
        it = cache.emplace(p, std::move(rows)).first;
    }
    return it->second;
}

// Q_p(x, lambda) and the sum of absolute term magnitudes.
std::pair<Complex, double> q_value(unsigned p, Complex lambda, Complex x) {
    const auto& rows = q_table(p);
    Complex acc = 0.0;
    double mag = 0.0;
    const double ax = std::abs(x);
    const double al = std::abs(lambda);
    for (std::size_t i = rows.size(); i-- > 0;) {
        Complex inner = 0.0;
        double inner_mag = 0.0;
        for (std::size_t j = rows[i].size(); j-- > 0;) {
            inner = inner * lambda + rows[i][j];
            inner_mag = inner_mag * al + std::abs(rows[i][j]);
        }
        acc = acc * x + inner;
        mag = mag * ax + inner_mag;
    }
    return {acc, mag};
}

bool is_nonpositive_integer(Complex s) { return is_integer(s) && s.real() <= 0.0; }

EvalResult series_core(Complex s, Complex lambda, Complex x, double tol, bool scaled) {
    require_lambda(lambda);
    require_tol(tol);
    if (x == 0.0) {
        if (s.imag() == 0.0 && lambda.imag() == 0.0) {
            return {std::pow(lambda.real(), -s.real()), 0.0, 1, Method::series};
        }
        return {std::exp(-s * std::log(lambda)), 0.0, 1, Method::series};
    }
    const double ax = std::abs(x);
    const double sigma = s.real();
    const double im_s = std::abs(s.imag());
    const double al = std::abs(lambda);
    const Complex log_x = std::log(x);
    const std::int64_t cap = term_cap.load();

    // weight_n = x^n / n!, times e^(-x) when scaled
    Complex weight = 1.0;
    double log_abs_weight = 0.0;
    if (scaled) {
        log_abs_weight = -x.real();
        weight = std::exp(-x);
    }
    Complex sum = 0.0;
    double abs_sum = 0.0;
    double tail = std::numeric_limits<double>::infinity();
    std::int64_t n = 0;
    for (;; ++n) {
        if (n >= cap) {
            throw Error(ErrorKind::convergence,
                        "series did not converge within " + std::to_string(cap) + " terms");
        }
        if (n > 0) {
            const double dn = static_cast<double>(n);
            if (scaled) {
                const Complex lw = dn * log_x - std::lgamma(dn + 1.0) - x;
                weight = std::exp(lw);
                log_abs_weight = lw.real();
            } else {
                weight *= x / dn;
                log_abs_weight += std::log(ax / dn);
            }
        }
        const Complex term = weight * std::exp(-s * std::log(static_cast<double>(n) + lambda));
        if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
            throw Error(ErrorKind::overflow, "series term overflows binary64");
        }
        sum += term;
        abs_sum += std::abs(term);

        // bound on |term_m| for m > n
        const double next = static_cast<double>(n + 1);
        double rho = ax / (next + 1.0);
        double m_factor;
        if (sigma >= 0.0) {
            m_factor = std::pow(next + lambda.real(), -sigma);
        } else {
            m_factor = std::pow(next + al, -sigma);
            rho *= std::pow(1.0 + 1.0 / (next + al), -sigma);
        }
        if (rho <= 0.5) {
            const double g = std::exp(im_s * std::abs(std::arg(next + lambda)));
            const double a = std::exp(log_abs_weight + std::log(ax / next)) * m_factor * g;
            tail = a / (1.0 - rho);
            if ((tail <= tol && tail <= eps * abs_sum) || tail <= 1e-17 * abs_sum) {
                break;
            }
        }
    }
    return {sum, tail + 8.0 * eps * abs_sum, n + 1, Method::series};
}

// Tabulated level e_q(x u) on Chebyshev points of [0, 1].
struct ChebLevel {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<Complex> values;

    Complex operator()(double u) const {
        Complex num = 0.0;
        double den = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const double d = u - nodes[j];
            if (d == 0.0) {
                return values[j];
            }
            const double w = weights[j] / d;
            num += w * values[j];
            den += w;
        }
        return num / den;
    }
};

ChebLevel cheb_skeleton(int n) {
    ChebLevel level;
    for (int j = 0; j <= n; ++j) {
        level.nodes.push_back(0.5 * (1.0 - std::cos(pi * j / n)));
        double w = (j % 2 == 0) ? 1.0 : -1.0;
        if (j == 0 || j == n) {
            w *= 0.5;
        }
        level.weights.push_back(w);
    }
    return level;
}

struct RecursionRun {
    Complex value;
    double err;
    std::int64_t evals;
};

RecursionRun recursion_run(unsigned p, Complex lambda, Complex x, double level_tol, int n) {
    const Complex lm1 = lambda - 1.0;
    std::int64_t evals = 0;
    double err = 0.0;
    auto integrate = [&](const std::function<Complex(double)>& f) {
        auto integrand = [&](double w) {
            ++evals;
            return std::exp(lm1 * std::log(w)) * f(w);
        };
        const auto r = quad::tanh_sinh(integrand, 0.0, 1.0, level_tol, 1e-15);
        if (!r.converged) {
            throw Error(ErrorKind::convergence, "recursion quadrature did not converge");
        }
        err += r.abs_err;
        return r.value;
    };

    std::function<Complex(double)> current = [x](double u) { return std::exp(x * u); };
    ChebLevel table;
    for (unsigned q = 1; q < p; ++q) {
        ChebLevel next = cheb_skeleton(n);
        for (double v : next.nodes) {
            next.values.push_back(integrate([&current, v](double w) { return current(v * w); }));
        }
        table = std::move(next);
        current = [&table](double u) { return table(u); };
    }
    const Complex value = integrate(current);
    return {value, err, evals};
}

double hankel_tail(Complex s, double rate, double bound, double T, bool log_weight) {
    const double sigma = s.real();
    const double shape = std::pow(T, sigma - 1.0) * (log_weight ? std::log(T) + pi + 1.0 : 1.0);
    double decay = rate;
    const double drift = std::max(0.0, sigma - 1.0) / T + (log_weight ? 1.0 / (T * std::log(T)) : 0.0);
    if (drift >= rate / 2.0) {
        return std::numeric_limits<double>::infinity();
    }
    decay = rate - drift;
    return 2.0 * std::exp(pi * std::abs(s.imag())) * bound * shape * std::exp(-rate * T) / decay;
}

struct LoopParts {
    Complex lower;
    Complex upper;
    Complex circle;
};

LoopParts loop_parts(Complex s, const std::function<Complex(Complex)>& g, bool log_weight, double epsilon,
                     double T, int ray_panels, int circle_panels, std::int64_t& evals) {
    const Complex sm1 = s - 1.0;
    const Complex lower_phase = std::exp(-I * pi * sm1);
    const Complex upper_phase = std::exp(I * pi * sm1);
    auto ray = [&](Complex phase, double arg) {
        return [&, phase, arg](double r) {
            ++evals;
            const double lr = std::log(r);
            Complex v = phase * std::exp(sm1 * lr) * g(Complex(-r, 0.0));
            if (log_weight) {
                v *= Complex(lr, arg);
            }
            return v;
        };
    };
    LoopParts parts;
    parts.lower = quad::gauss_legendre_panels(ray(lower_phase, -pi), epsilon, T, ray_panels, 8);
    parts.upper = -quad::gauss_legendre_panels(ray(upper_phase, pi), epsilon, T, ray_panels, 8);
    const double ln_eps = std::log(epsilon);
    auto circle = [&](double theta) {
        ++evals;
        const Complex z = std::polar(epsilon, theta);
        const Complex log_z(ln_eps, theta);
        Complex v = std::exp(sm1 * log_z) * g(z) * I * z;
        if (log_weight) {
            v *= log_z;
        }
        return v;
    };
    parts.circle = quad::gauss_legendre_panels(circle, -pi, pi, circle_panels, 8);
    return parts;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

EvalResult hankel_core(Complex s, const std::function<Complex(Complex)>& g, bool log_weight, Complex prefactor,
                       double rate, double bound, const HankelContourSpec& contour, double tol) {
    if (!(contour.epsilon > 0.0) || !(contour.truncation > contour.epsilon)) {
        throw Error(ErrorKind::domain, "Hankel contour needs 0 < epsilon < truncation");
    }
    if (contour.nodes_ray < 8 || contour.nodes_circle < 8) {
        throw Error(ErrorKind::domain, "Hankel contour needs at least 8 nodes per piece");
    }
    require_tol(tol);
    const double pref_abs = std::abs(prefactor);
    const double tol_int = tol / std::max(pref_abs, 1e-300);
    const double tail = hankel_tail(s, rate, bound, contour.truncation, log_weight);
    std::int64_t evals = 0;
    int ray_panels = std::max(1, contour.nodes_ray / 8);
    int circle_panels = std::max(1, contour.nodes_circle / 8);
    LoopParts prev = loop_parts(s, g, log_weight, contour.epsilon, contour.truncation, ray_panels, circle_panels, evals);
    Complex prev_total = prev.lower + prev.upper + prev.circle;
    constexpr int max_doublings = 10;
    for (int k = 0; k < max_doublings; ++k) {
        ray_panels *= 2;
        circle_panels *= 2;
        const LoopParts cur =
            loop_parts(s, g, log_weight, contour.epsilon, contour.truncation, ray_panels, circle_panels, evals);
        const Complex total = cur.lower + cur.upper + cur.circle;
        if (!finite(total)) {
            throw Error(ErrorKind::contour, "Hankel integrand is not finite on the contour");
        }
        const double scale = std::abs(cur.lower) + std::abs(cur.upper) + std::abs(cur.circle);
        if (!log_weight) {
            // upper ray is the lower ray rotated once around the branch point
            const Complex predicted = -std::exp(2.0 * pi * I * (s - 1.0)) * cur.lower;
            if (std::abs(cur.upper - predicted) > 1e-8 * scale + tol_int) {
                throw Error(ErrorKind::contour, "Hankel ray contributions are inconsistent");
            }
        }
        const double diff = std::abs(total - prev_total);
        if (diff <= std::max(tol_int, 4.0 * eps * scale)) {
            const double err = pref_abs * (diff + tail + 8.0 * eps * scale);
            return {prefactor * total, err, evals, Method::hankel};
        }
        prev_total = total;
    }
    throw Error(ErrorKind::contour, "Hankel quadrature did not settle under refinement");
}

Complex hankel_prefactor(Complex s, bool& log_weight) {
    log_weight = is_integer(s) && s.real() >= 1.0;
    if (log_weight) {
        const int m = static_cast<int>(s.real());
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        return sign / (2.0 * pi * I * std::exp(std::lgamma(static_cast<double>(m))));
    }
    return gamma_fn(1.0 - s) / (2.0 * pi * I);
}

// Point abscissae for the Mellin-route integral.
std::vector<double> mellin_breaks(Complex x, double U) {
    const double ax = std::abs(x);
    const double a = 1.0 / std::max(1.0, ax);
    const double ell = std::log(std::max(1.0, ax));
    std::vector<double> pts = {0.0, a};
    if (60.0 * a < ell + 8.0) {
        pts.push_back(60.0 * a);
    }
    pts.push_back(ell + 8.0);
    if (U > pts.back()) {
        pts.push_back(U);
    }
    return pts;
}

EvalResult lifted(Complex s, Complex lambda, Complex x, double tol, bool scaled, int depth);

EvalResult dispatch(Complex s, Complex lambda, Complex x, double tol, bool scaled, int depth) {
    const double ax = std::abs(x);
    const bool series_ok = ax <= 6.0 || (x.real() >= 0.0 && ax - x.real() <= 8.0);
    if (series_ok) {
        return series_core(s, lambda, x, tol, scaled);
    }
    if (s.real() > 0.0) {
        return eval_mellin_route(s, lambda, x, tol, scaled);
    }
    return lifted(s, lambda, x, tol, scaled, depth);
}

EvalResult lifted(Complex s, Complex lambda, Complex x, double tol, bool scaled, int depth) {
    if (depth > 12) {
        return series_core(s, lambda, x, tol, scaled);
    }
    // e_s(x, l) = l e_{s+1}(x, l) + x e_{s+1}(x, l + 1)
    const double w = std::max(1.0, std::abs(lambda) + std::abs(x));
    const auto a = dispatch(s + 1.0, lambda, x, tol / (2.0 * w), scaled, depth + 1);
    const auto b = dispatch(s + 1.0, lambda + 1.0, x, tol / (2.0 * w), scaled, depth + 1);
    return {lambda * a.value + x * b.value, std::abs(lambda) * a.abs_err + std::abs(x) * b.abs_err,
            a.work + b.work, a.method};
}

}  // namespace

std::int64_t series_term_cap() { return term_cap.load(); }

void set_series_term_cap(std::int64_t cap) {
    if (cap < 1) {
        throw Error(ErrorKind::domain, "series term cap must be positive");
    }
    term_cap.store(cap);
}

EvalResult eval_series(Complex s, Complex lambda, Complex x, double tol) {
    return series_core(s, lambda, x, tol, false);
}

Complex eval_negint(unsigned p, Complex lambda, Complex x) {
    require_lambda(lambda);
    return std::exp(x) * q_value(p, lambda, x).first;
}

EvalResult eval_via_recursion(unsigned p, Complex lambda, Complex x, double tol) {
    require_lambda(lambda);
    require_tol(tol);
    if (p == 0) {
        throw Error(ErrorKind::domain, "recursion needs p >= 1");
    }
    const double level_tol = tol / (10.0 * p);
    if (p == 1) {
        const auto r = recursion_run(1, lambda, x, level_tol, 0);
        return {r.value, r.err, r.evals, Method::recursion};
    }
    std::int64_t evals = 0;
    RecursionRun prev = recursion_run(p, lambda, x, level_tol, 16);
    evals += prev.evals;
    for (int n = 32; n <= 256; n *= 2) {
        const RecursionRun cur = recursion_run(p, lambda, x, level_tol, n);
        evals += cur.evals;
        const double diff = std::abs(cur.value - prev.value);
        if (diff <= tol) {
            return {cur.value, diff + cur.err, evals, Method::recursion};
        }
        prev = cur;
    }
    throw Error(ErrorKind::convergence, "recursion interpolation did not settle");
}

HankelContourSpec default_hankel_contour(Complex s, Complex lambda, Complex x, double tol) {
    require_lambda(lambda);
    bool log_weight = false;
    const double pref = std::abs(hankel_prefactor(s, log_weight));
    HankelContourSpec spec;
    spec.epsilon = 1.0;
    double T = std::max(30.0, std::abs(x) + std::abs(lambda) + 30.0);
    for (int k = 0; k < 400; ++k) {
        const double bound = std::exp(std::max(0.0, x.real()) * std::exp(-T));
        if (pref * hankel_tail(s, lambda.real(), bound, T, log_weight) <= tol / 10.0) {
            break;
        }
        T += 5.0;
    }
    spec.truncation = T;
    spec.nodes_ray = 128;
    spec.nodes_circle = 64;
    return spec;
}

EvalResult eval_hankel(Complex s, Complex lambda, Complex x, const HankelContourSpec& contour, double tol) {
    require_lambda(lambda);
    bool log_weight = false;
    const Complex prefactor = hankel_prefactor(s, log_weight);
    auto g = [lambda, x](Complex z) { return std::exp(lambda * z + x * std::exp(z)); };
    const double bound = std::exp(std::max(0.0, x.real()) * std::exp(-contour.truncation));
    return hankel_core(s, g, log_weight, prefactor, lambda.real(), bound, contour, tol);
}

EvalResult eval_hankel(Complex s, Complex lambda, Complex x, double tol) {
    return eval_hankel(s, lambda, x, default_hankel_contour(s, lambda, x, tol), tol);
}

EvalResult hankel_loop(Complex s, const std::function<Complex(Complex)>& g, double rate, double bound,
                       const HankelContourSpec& contour, double tol) {
    if (is_integer(s) && s.real() >= 1.0) {
        throw Error(ErrorKind::pole, "Hankel loop needs s not a positive integer");
    }
    return hankel_core(s, g, false, gamma_fn(1.0 - s) / (2.0 * pi * I), rate, bound, contour, tol);
}

EvalResult eval_mellin_route(Complex s, Complex lambda, Complex x, double tol, bool scaled) {
    require_lambda(lambda);
    require_tol(tol);
    if (!(s.real() > 0.0)) {
        throw Error(ErrorKind::domain, "Mellin route needs Re s > 0");
    }
    const double sigma = s.real();
    const double rho = lambda.real();
    const Complex rg = rgamma(s);
    const double rg_abs = std::abs(rg);
    const double target = tol / std::max(rg_abs, 1e-300);
    const Complex sm1 = s - 1.0;
    auto integrand = [&](double u) {
        const Complex g = scaled ? std::exp(x * std::expm1(-u)) : std::exp(x * std::exp(-u));
        return std::exp(sm1 * std::log(u) - lambda * u) * g;
    };

    // tail beyond U: |g| <= gbound, |u^(s-1) e^(-lambda u)| = u^(sigma-1) e^(-rho u)
    auto tail_bound = [&](double U) {
        const double drift = std::max(0.0, sigma - 1.0) / U;
        if (drift >= rho / 2.0) {
            return std::numeric_limits<double>::infinity();
        }
        const double gbound = scaled ? std::exp(std::max(0.0, -x.real()))
                                     : std::exp(std::max(0.0, x.real()) * std::exp(-U));
        return gbound * std::pow(U, sigma - 1.0) * std::exp(-rho * U) / (rho - drift);
    };
    const double ell = std::log(std::max(1.0, std::abs(x)));
    double U = ell + 18.0;
    while (tail_bound(U) > target / 10.0) {
        U *= 1.25;
        if (U > 1e6) {
            throw Error(ErrorKind::convergence, "Mellin-route tail does not decay");
        }
    }
    const auto pts = mellin_breaks(x, U);
    const double piece_tol = target / (2.0 * static_cast<double>(pts.size()));
    Complex total = 0.0;
    double err = tail_bound(U);
    std::int64_t evals = 0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const auto r = (k == 0) ? quad::tanh_sinh(integrand, pts[0], pts[1], piece_tol, 1e-14)
                                : quad::gauss_kronrod(integrand, pts[k], pts[k + 1], piece_tol, 1e-14);
        if (!r.converged) {
            throw Error(ErrorKind::convergence, "Mellin-route quadrature did not converge");
        }
        total += r.value;
        err += r.abs_err;
        evals += r.evals;
    }
    return {rg * total, rg_abs * err, evals, Method::mellin_integral};
}

EvalResult eval_incgamma_route(Complex lambda, double x, double tol) {
    require_lambda(lambda);
    if (!(x <= 0.0)) {
        throw Error(ErrorKind::domain, "incomplete-gamma route needs real x <= 0");
    }
    if (x == 0.0) {
        return {1.0 / lambda, 0.0, 1, Method::incgamma};
    }
    const Complex scale = std::exp(-lambda * std::log(-x));
    const auto g = lower_inc_gamma(lambda, -x, tol / std::max(1.0, std::abs(scale)));
    return {scale * g.value, std::abs(scale) * g.abs_err, g.work, Method::incgamma};
}

EvalResult eval_ein_route(Complex x) {
    if (x == 0.0) {
        return {1.0, 0.0, 1, Method::ein};
    }
    const Complex v = -ein(-x) / x;
    return {v, 16.0 * eps * std::max(1.0, std::abs(v)) * std::exp(std::abs(x)), 1, Method::ein};
}

EvalResult evaluate(Complex s, Complex lambda, Complex x, double tol) {
    require_lambda(lambda);
    require_tol(tol);
    if (is_nonpositive_integer(s) && s.real() >= -200.0) {
        const auto p = static_cast<unsigned>(-s.real());
        const auto [q, mag] = q_value(p, lambda, x);
        const Complex ex = std::exp(x);
        return {ex * q, 16.0 * eps * std::abs(ex) * mag, 1, Method::closed_form};
    }
    return dispatch(s, lambda, x, tol, false, 0);
}

EvalResult evaluate_scaled(Complex s, Complex lambda, Complex x, double tol) {
    require_lambda(lambda);
    require_tol(tol);
    if (is_nonpositive_integer(s) && s.real() >= -200.0) {
        const auto p = static_cast<unsigned>(-s.real());
        const auto [q, mag] = q_value(p, lambda, x);
        return {q, 16.0 * eps * mag, 1, Method::closed_form};
    }
    if (x.real() < -700.0) {
        throw Error(ErrorKind::overflow, "e^(-x) overflows for Re x < -700");
    }
    if (x.real() <= 40.0) {
        const auto r = dispatch(s, lambda, x, tol / std::max(1.0, std::abs(std::exp(-x))), false, 0);
        const Complex ex = std::exp(-x);
        return {ex * r.value, std::abs(ex) * r.abs_err, r.work, r.method};
    }
    if (s.real() > 0.0) {
        return eval_mellin_route(s, lambda, x, tol, true);
    }
    return series_core(s, lambda, x, tol, true);
}

EvalResult taylor_shift(Complex s, Complex lambda, Complex z, Complex x, unsigned terms, double tol) {
    require_lambda(lambda);
    if (terms < 1) {
        throw Error(ErrorKind::domain, "Taylor shift needs at least one term");
    }
    const double ratio = std::abs(z) / std::abs(lambda);
    if (!(ratio < 1.0)) {
        throw Error(ErrorKind::domain, "Taylor shift diverges for |z| >= |lambda|");
    }
    Complex sum = 0.0;
    Complex coeff = 1.0;  // (s)_m / m! z^m
    double err = 0.0;
    double last = 0.0;
    std::int64_t work = 0;
    for (unsigned m = 0; m < terms; ++m) {
        if (m > 0) {
            coeff *= (s + static_cast<double>(m - 1)) * z / static_cast<double>(m);
        }
        if (coeff == 0.0) {
            last = 0.0;
            break;
        }
        const auto e = evaluate(s + static_cast<double>(m), lambda, x, tol / terms);
        const Complex term = coeff * e.value;
        sum += term;
        err += std::abs(coeff) * e.abs_err;
        work += e.work;
        last = std::abs(term);
    }
    err += last * ratio / (1.0 - ratio);
    return {sum, err, work, Method::taylor_shift};
}

Complex generating_sum(Complex lambda, Complex x, Complex z, unsigned terms, double tol) {
    require_lambda(lambda);
    if (!(std::abs(z) < std::abs(lambda))) {
        throw Error(ErrorKind::domain, "generating sum diverges for |z| >= |lambda|");
    }
    Complex sum = 0.0;
    Complex zp = 1.0;
    for (unsigned p = 0; p < terms; ++p) {
        const Complex e = (p == 0) ? std::exp(x) : evaluate(static_cast<double>(p), lambda, x, tol).value;
        sum += e * zp;
        zp *= z;
    }
    return sum;
}

EvalResult asymptotic_lambda(Complex s, Complex lambda, Complex x, unsigned order) {
    if (order > 12) {
        throw Error(ErrorKind::domain, "asymptotic order must be <= 12");
    }
    const Complex ex = std::exp(x);
    const Complex log_lambda = std::log(lambda);
    Complex binom = 1.0;  // C(-s, n)
    Complex sum = 0.0;
    double omitted = 0.0;
    for (unsigned n = 0; n <= order + 1; ++n) {
        if (n > 0) {
            binom *= (-s - static_cast<double>(n - 1)) / static_cast<double>(n);
        }
        const Complex term =
            binom * std::exp((-static_cast<double>(n) - s) * log_lambda) * exact::phi_poly(n).evaluate(x);
        if (n <= order) {
            sum += term;
        } else {
            omitted = std::abs(ex * term);
        }
    }
    return {ex * sum, omitted, static_cast<std::int64_t>(order) + 1, Method::asymptotic};
}

Complex asymptotic_x_leading(Complex s, Complex lambda, double x, int sign) {
    if (!(x >= 10.0)) {
        throw Error(ErrorKind::domain, "leading x-asymptotic needs x >= 10");
    }
    if (sign != 1 && sign != -1) {
        throw Error(ErrorKind::domain, "sign must be +1 or -1");
    }
    const double lx = std::log(x);
    if (sign == 1) {
        return std::exp(x - s * lx);
    }
    return gamma_fn(lambda) * rgamma(s) * std::exp((s - 1.0) * std::log(lx) - lambda * lx);
}

}  // namespace polyexp

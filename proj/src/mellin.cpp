#include "polyexp/mellin.hpp"

#include "polyexp/format.hpp"
#include "polyexp/polyexp.hpp"
#include "polyexp/quadrature.hpp"
#include "polyexp/special.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace polyexp::mellin {

using exact::BigInt;
using exact::BigRational;
using exact::ExactPoly;

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

struct Root {
    Complex value;
    BigRational exact_value;
    bool is_exact = false;
    unsigned mult = 1;
};

// Yun's algorithm; returns (factor, multiplicity) for a monic f.
std::vector<std::pair<ExactPoly, unsigned>> square_free(const ExactPoly& f) {
    std::vector<std::pair<ExactPoly, unsigned>> out;
    if (f.degree() < 1) {
        return out;
    }
    const ExactPoly df = f.derivative();
    const ExactPoly a0 = exact::gcd(f, df);
    ExactPoly b = exact::divmod(f, a0).first;
    ExactPoly c = exact::divmod(df, a0).first;
    ExactPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        const ExactPoly a = exact::gcd(b, d);
        if (a.degree() > 0) {
            out.emplace_back(a, i);
        }
        b = exact::divmod(b, a).first;
        c = exact::divmod(d, a).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> small, large;
    const BigInt m = abs(n);
    for (BigInt k = 1; k * k <= m; ++k) {
        if (m % k == 0) {
            small.push_back(k);
            if (k * k != m) {
                large.push_back(m / k);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Exact rational roots of g, dividing each out; g is left with the rest.
std::vector<BigRational> rational_roots(ExactPoly& g) {
    std::vector<BigRational> roots;
    while (g.degree() >= 1 && g.coeff(0) == 0) {
        roots.emplace_back(0);
        g = exact::divmod(g, ExactPoly::monomial(1, 1)).first;
    }
    if (g.degree() < 1) {
        return roots;
    }
    BigInt lcm = 1;
    for (const auto& c : g.coefficients()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    const BigInt a0 = BigRational(g.coeff(0) * lcm).get_num();
    const BigInt an = BigRational(g.leading() * lcm).get_num();
    const BigInt limit("1000000000000");
    if (abs(a0) > limit || abs(an) > limit) {
        return roots;
    }
    const auto ps = divisors(a0);
    const auto qs = divisors(an);
    for (const auto& q : qs) {
        for (const auto& p : ps) {
            for (int sign : {1, -1}) {
                if (g.degree() < 1) {
                    return roots;
                }
                const BigRational r = exact::make_rational(BigInt(p * sign), q);
                while (g.degree() >= 1 && g(r) == 0) {
                    roots.push_back(r);
                    g = exact::divmod(g, ExactPoly::linear_root(r)).first;
                }
            }
        }
    }
    return roots;
}

std::vector<Complex> to_complex(const ExactPoly& p) {
    std::vector<Complex> out;
    for (const auto& c : p.coefficients()) {
        out.emplace_back(exact::to_double(c), 0.0);
    }
    return out;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * z + c[k];
    }
    return acc;
}

void newton_polish(const std::vector<Complex>& c, Complex& z) {
    std::vector<Complex> dc;
    for (std::size_t k = 1; k < c.size(); ++k) {
        dc.push_back(static_cast<double>(k) * c[k]);
    }
    for (int it = 0; it < 50; ++it) {
        const Complex f = horner(c, z);
        const Complex df = horner(dc, z);
        if (df == 0.0) {
            break;
        }
        const Complex step = f / df;
        z -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) {
            break;
        }
    }
}

std::vector<Complex> numeric_roots(const ExactPoly& g) {
    const auto c = to_complex(g.monic());
    const int n = g.degree();
    std::vector<Complex> roots;
    if (n == 1) {
        roots.push_back(-c[0]);
    } else if (n == 2) {
        const Complex b = c[1];
        const Complex disc = std::sqrt(b * b - 4.0 * c[0]);
        const Complex q = -0.5 * (b + (std::real(std::conj(b) * disc) >= 0.0 ? disc : -disc));
        if (q == 0.0) {
            roots = {0.0, 0.0};
        } else {
            roots = {q, c[0] / q};
        }
    } else {
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 1; i < n; ++i) {
            companion(i, i - 1) = 1.0;
        }
        for (int i = 0; i < n; ++i) {
            companion(i, n - 1) = -c[static_cast<std::size_t>(i)];
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
        if (solver.info() != Eigen::Success) {
            throw Error(ErrorKind::convergence, "companion eigenvalue solver failed");
        }
        for (int i = 0; i < n; ++i) {
            roots.push_back(solver.eigenvalues()(i));
        }
    }
    double scale = 0.0;
    for (const auto& z : roots) {
        scale = std::max(scale, std::abs(z));
    }
    for (auto& z : roots) {
        newton_polish(c, z);
        double mag = 0.0;
        const double az = std::abs(z);
        for (std::size_t k = c.size(); k-- > 0;) {
            mag = mag * az + std::abs(c[k]);
        }
        if (std::abs(horner(c, z)) > 1e-12 * std::max(1.0, mag)) {
            throw Error(ErrorKind::convergence, "root refinement did not reach the residual target");
        }
        if (std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z))) {
            z = z.real();
        }
    }
    return roots;
}

std::vector<Root> find_roots(const ExactPoly& den) {
    std::vector<Root> roots;
    for (auto& [factor, mult] : square_free(den)) {
        ExactPoly rest = factor;
        for (const auto& r : rational_roots(rest)) {
            roots.push_back({Complex(exact::to_double(r), 0.0), r, true, mult});
        }
        if (rest.degree() == 1) {
            const BigRational r = -rest.monic().coeff(0);
            roots.push_back({Complex(exact::to_double(r), 0.0), r, true, mult});
        } else if (rest.degree() > 1) {
            for (const auto& z : numeric_roots(rest)) {
                roots.push_back({z, BigRational(0), false, mult});
            }
        }
    }

    // merge numeric clusters
    std::vector<Root> merged;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) {
            continue;
        }
        Root acc = roots[i];
        Complex weighted = acc.value * static_cast<double>(acc.mult);
        double diameter = 0.0;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j] || (roots[i].is_exact && roots[j].is_exact)) {
                continue;
            }
            const double d = std::abs(roots[i].value - roots[j].value) /
                             std::max(1.0, std::abs(roots[i].value));
            if (d < 1e-8) {
                used[j] = true;
                weighted += roots[j].value * static_cast<double>(roots[j].mult);
                acc.mult += roots[j].mult;
                acc.is_exact = false;
                diameter = std::max(diameter, d);
            } else if (d <= 1e-5) {
                std::ostringstream msg;
                msg << "poles " << roots[i].value << " and " << roots[j].value
                    << " are nearly merged (cluster diameter " << d << ")";
                throw Error(ErrorKind::ill_conditioned, msg.str());
            }
        }
        if (!acc.is_exact) {
            acc.value = weighted / static_cast<double>(acc.mult);
        }
        merged.push_back(acc);
    }
    return merged;
}

template <typename T>
std::vector<T> series_div(const std::vector<T>& num, const std::vector<T>& den, std::size_t n) {
    std::vector<T> out(n, T(0));
    for (std::size_t k = 0; k < n; ++k) {
        T acc = k < num.size() ? num[k] : T(0);
        for (std::size_t j = 1; j <= k && j < den.size(); ++j) {
            acc -= den[j] * out[k - j];
        }
        out[k] = acc / den[0];
    }
    return out;
}

// Coefficients of p(lambda - u) in u, through degree n - 1.
std::vector<Complex> reflect_shift(const std::vector<Complex>& c, Complex lambda, std::size_t n) {
    std::vector<Complex> work = c;
    std::vector<Complex> out;
    // repeated synthetic division gives the Taylor coefficients at lambda
    for (std::size_t k = 0; k < n; ++k) {
        if (work.empty()) {
            out.push_back(0.0);
            continue;
        }
        Complex carry = 0.0;
        std::vector<Complex> quotient(work.size() > 1 ? work.size() - 1 : 0);
        for (std::size_t j = work.size(); j-- > 0;) {
            const Complex v = work[j] + carry * lambda;
            if (j > 0) {
                quotient[j - 1] = v;
            }
            carry = v;
            if (j == 0) {
                out.push_back((k % 2 == 0) ? v : -v);
            }
        }
        work = std::move(quotient);
    }
    return out;
}

void append_exact_terms(const ExactPoly& rem, const ExactPoly& den, const Root& root, PartialFractions& pf) {
    const unsigned m = root.mult;
    ExactPoly e = den;
    for (unsigned k = 0; k < m; ++k) {
        e = exact::divmod(e, ExactPoly::linear_root(root.exact_value)).first;
    }
    ExactPoly num = rem.compose_linear(root.exact_value, BigRational(-1));
    if (m % 2 == 1) {
        num = -num;
    }
    const ExactPoly e_u = e.compose_linear(root.exact_value, BigRational(-1));
    const auto f = series_div<BigRational>(num.coefficients(), e_u.coefficients(), m);
    for (unsigned j = 1; j <= m; ++j) {
        const BigRational& a = f[m - j];
        if (a != 0) {
            pf.pole_terms.push_back({root.value, j, Complex(exact::to_double(a), 0.0), true});
        }
    }
}

void append_numeric_terms(const ExactPoly& rem, const std::vector<Root>& roots, std::size_t index,
                          PartialFractions& pf) {
    const Root& root = roots[index];
    const unsigned m = root.mult;
    const Complex lambda = root.value;
    // E(lambda - u) = prod over other poles (lambda - mu - u)^mult, truncated
    std::vector<Complex> e_u = {1.0};
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i == index) {
            continue;
        }
        const Complex a = lambda - roots[i].value;
        for (unsigned k = 0; k < roots[i].mult; ++k) {
            std::vector<Complex> next(std::min<std::size_t>(e_u.size() + 1, m), 0.0);
            for (std::size_t j = 0; j < e_u.size(); ++j) {
                if (j < next.size()) {
                    next[j] += a * e_u[j];
                }
                if (j + 1 < next.size()) {
                    next[j + 1] -= e_u[j];
                }
            }
            e_u = std::move(next);
        }
    }
    std::vector<Complex> num = reflect_shift(to_complex(rem), lambda, m);
    if (m % 2 == 1) {
        for (auto& v : num) {
            v = -v;
        }
    }
    const auto f = series_div<Complex>(num, e_u, m);
    for (unsigned j = 1; j <= m; ++j) {
        pf.pole_terms.push_back({lambda, j, f[m - j], false});
    }
}

void require_positive_x(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorKind::domain, "x must be a positive finite real");
    }
}

double pole_gap(const PartialFractions& pf, double c) {
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& t : pf.pole_terms) {
        gap = std::min(gap, std::abs(t.pole.real() - c));
    }
    return gap;
}

}  // namespace

Complex PartialFractions::operator()(Complex s) const {
    Complex acc = 0.0;
    for (std::size_t k = poly_part.size(); k-- > 0;) {
        acc = acc * (-s) + exact::to_double(poly_part[k]);
    }
    for (const auto& t : pole_terms) {
        acc += t.coeff / std::pow(t.pole - s, static_cast<int>(t.order));
    }
    return acc;
}

PartialFractions partial_fractions(const RationalFunction& r) {
    PartialFractions pf;
    const auto [quot, rem] = exact::divmod(r.numerator, r.denominator);
    for (std::size_t k = 0; k < quot.coefficients().size(); ++k) {
        BigRational a = quot.coefficients()[k];
        if (k % 2 == 1) {
            a = -a;
        }
        pf.poly_part.push_back(a);
    }
    if (r.denominator.degree() < 1 || rem.is_zero()) {
        return pf;
    }
    const ExactPoly den = r.denominator.monic();
    const auto roots = find_roots(den);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].is_exact) {
            append_exact_terms(rem, den, roots[i], pf);
        } else {
            append_numeric_terms(rem, roots, i, pf);
        }
    }
    return pf;
}

MellinExpression eval_theorem63(const RationalFunction& r, double c) {
    if (!(c > 0.0)) {
        throw Error(ErrorKind::precondition, "line abscissa c must be positive");
    }
    const auto pf = partial_fractions(r);
    MellinExpression e;
    e.c = c;
    e.exp_poly = pf.poly_part;
    for (const auto& t : pf.pole_terms) {
        if (!(t.pole.real() > c)) {
            std::ostringstream msg;
            msg << "pole " << t.pole << " has Re <= c = " << c << "; move the line with shift_adjust";
            throw Error(ErrorKind::precondition, msg.str());
        }
        e.terms.push_back({t.coeff, t.order, t.pole});
    }
    return e;
}

MellinExpression shift_adjust(const RationalFunction& r, double c, double c_new) {
    if (!(c_new > 0.0) || !(c_new <= c)) {
        throw Error(ErrorKind::precondition, "shift_adjust needs 0 < c_new <= c");
    }
    const auto pf = partial_fractions(r);
    if (pole_gap(pf, c) < 1e-12 || pole_gap(pf, c_new) < 1e-12) {
        throw Error(ErrorKind::unsupported, "a pole lies on the integration line");
    }
    MellinExpression e = eval_theorem63(r, c_new);
    e.c = c;
    for (const auto& t : pf.pole_terms) {
        const double re = t.pole.real();
        if (re > c_new && re < c) {
            if (t.order >= 2) {
                throw Error(ErrorKind::unsupported, "crossed pole of order >= 2");
            }
            // residue of A/(lambda - s) x^(-s) Gamma(s) at s = lambda
            e.residues.push_back({-t.coeff, t.pole});
        }
    }
    return e;
}

EvalResult eval_expression(const MellinExpression& e, double x, double tol) {
    require_positive_x(x);
    Complex total = 0.0;
    double err = 0.0;
    double magnitude = 0.0;
    std::int64_t work = 0;
    const double ex = std::exp(-x);
    for (std::size_t k = 0; k < e.exp_poly.size(); ++k) {
        const double a = exact::to_double(e.exp_poly[k]);
        if (a == 0.0) {
            continue;
        }
        const Complex v = a * ex * exact::phi_poly(static_cast<unsigned>(k)).evaluate(-x);
        total += v;
        magnitude += std::abs(v);
        err += 16.0 * eps * std::abs(a) * ex * exact::phi_poly(static_cast<unsigned>(k)).evaluate(x).real();
        ++work;
    }
    const double share = tol / static_cast<double>(std::max<std::size_t>(1, e.terms.size()));
    for (const auto& t : e.terms) {
        const auto r = evaluate(static_cast<double>(t.p), t.lambda, -x, share / std::max(1.0, std::abs(t.coeff)));
        const Complex v = t.coeff * r.value;
        total += v;
        magnitude += std::abs(v);
        err += std::abs(t.coeff) * r.abs_err + 8.0 * eps * std::abs(v);
        work += r.work;
    }
    for (const auto& res : e.residues) {
        const Complex v = res.coeff * gamma_fn(res.pole) * std::exp(-res.pole * std::log(x));
        total += v;
        magnitude += std::abs(v);
        err += 16.0 * eps * std::abs(v);
        ++work;
    }
    if (e.real_valued) {
        if (std::abs(total.imag()) > 1e-9 * std::max(1.0, magnitude) + 10.0 * err) {
            throw Error(ErrorKind::ill_conditioned, "expression of a real rational function is not real");
        }
        total = total.real();
    }
    return {total, err, work, Method::closed_form};
}

namespace {

double line_tail(const RationalFunction& r, double x, double c, double T) {
    const int d = r.numerator.degree() - r.denominator.degree();
    const double rt = std::max(std::abs(r(Complex(c, T))), std::abs(r(Complex(c, -T))));
    const double k = 2.0 * rt / std::pow(T, d);
    const double a = c - 0.5 + d;
    const double drift = std::max(0.0, a) / T;
    if (drift >= pi / 4.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double b = std::pow(x, -c) * 1.5 * std::sqrt(2.0 * pi) * k;
    const double one_side = b * std::pow(T, a) * std::exp(-pi * T / 2.0) / (pi / 2.0 - drift);
    return 2.0 * one_side / (2.0 * pi);
}

}  // namespace

double line_integral_height(const RationalFunction& r, double x, double c, double tol) {
    require_positive_x(x);
    const auto pf = partial_fractions(r);
    double T = 10.0;
    for (const auto& t : pf.pole_terms) {
        T = std::max(T, std::abs(t.pole.imag()) + 10.0);
    }
    while (line_tail(r, x, c, T) > tol / 10.0) {
        T += 2.0;
        if (T > 800.0) {
            throw Error(ErrorKind::convergence, "no half-height meets the tail target");
        }
    }
    return T;
}

EvalResult oracle_line_integral(const RationalFunction& r, double x, double c, double half_height, double tol) {
    require_positive_x(x);
    if (!(c > 0.0)) {
        throw Error(ErrorKind::precondition, "line abscissa c must be positive");
    }
    if (!(half_height > 0.0)) {
        throw Error(ErrorKind::domain, "half-height must be positive");
    }
    const auto pf = partial_fractions(r);
    if (pole_gap(pf, c) < 1e-12) {
        throw Error(ErrorKind::domain, "c is a pole abscissa");
    }
    const double tail = line_tail(r, x, c, half_height);
    if (!(tail <= tol)) {
        throw Error(ErrorKind::convergence, "tail bound exceeds the target; increase the half-height");
    }
    const double lx = std::log(x);
    auto f = [&](double t) {
        const Complex s(c, t);
        return std::exp(-s * lx) * r(s) * gamma_fn(s);
    };
    std::vector<double> pts = {-half_height, 0.0, half_height};
    for (const auto& t : pf.pole_terms) {
        const double y = t.pole.imag();
        if (std::abs(y) < half_height && y != 0.0) {
            pts.push_back(y);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Complex total = 0.0;
    double err = tail;
    std::int64_t evals = 0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const auto q = quad::gauss_kronrod(f, pts[k], pts[k + 1], tol / (4.0 * pts.size()), 1e-14);
        if (!q.converged) {
            throw Error(ErrorKind::convergence, "line-integral quadrature did not converge");
        }
        total += q.value;
        err += q.abs_err / (2.0 * pi);
        evals += q.evals;
    }
    return {total / (2.0 * pi), err, evals, Method::quadrature};
}

std::string to_json(const MellinExpression& e) {
    std::string out = "{\"exp_poly\": [";
    for (std::size_t k = 0; k < e.exp_poly.size(); ++k) {
        out += (k ? ", " : "") + json_quote(exact::to_string(e.exp_poly[k]));
    }
    out += "], \"terms\": [";
    for (std::size_t k = 0; k < e.terms.size(); ++k) {
        const auto& t = e.terms[k];
        out += (k ? ", " : "");
        out += "{\"coeff\": " + format_complex(t.coeff) + ", \"p\": " + std::to_string(t.p) +
               ", \"lambda\": " + format_complex(t.lambda) + "}";
    }
    out += "], \"c\": " + format_double(e.c);
    if (!e.residues.empty()) {
        out += ", \"residues\": [";
        for (std::size_t k = 0; k < e.residues.size(); ++k) {
            out += (k ? ", " : "");
            out += "{\"coeff\": " + format_complex(e.residues[k].coeff) +
                   ", \"pole\": " + format_complex(e.residues[k].pole) + "}";
        }
        out += "]";
    }
    out += "}";
    return out;
}

}  // namespace polyexp::mellin

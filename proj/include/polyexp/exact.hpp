#pragma once

// Exact rational arithmetic for the combinatorial side of polyexponentials:
// Bernoulli and Stirling numbers, exponential polynomials phi_n, the
// bivariate Q_p(x, lambda), Euler and Faulhaber polynomials.
//
// Memo tables (Bernoulli, Stirling) are internally synchronized; every
// other function is pure.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyexp::exact {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// "num/den" in lowest terms; the denominator is always printed.
std::string to_string(const BigRational& q);

/// Accepts "num/den", an integer, or a plain decimal literal such as "-0.125".
BigRational parse_rational_literal(std::string_view text);

double to_double(const BigRational& q);

/// Dense univariate polynomial, coefficients in ascending powers.
/// The zero polynomial has an empty coefficient list and degree -1.
class ExactPoly {
public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<BigRational> coeffs);

    static ExactPoly constant(const BigRational& c);
    static ExactPoly monomial(const BigRational& c, std::size_t power);
    /// x - root
    static ExactPoly linear_root(const BigRational& root);

    const std::vector<BigRational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigRational coeff(std::size_t k) const;
    BigRational leading() const;

    BigRational operator()(const BigRational& x) const;
    std::complex<double> evaluate(std::complex<double> x) const;

    ExactPoly derivative() const;
    /// Antiderivative vanishing at 0.
    ExactPoly integral() const;
    /// p(a + b x) expanded.
    ExactPoly compose_linear(const BigRational& a, const BigRational& b) const;
    ExactPoly monic() const;

    ExactPoly& operator+=(const ExactPoly& rhs);
    ExactPoly& operator-=(const ExactPoly& rhs);
    ExactPoly& operator*=(const ExactPoly& rhs);
    ExactPoly& operator*=(const BigRational& c);

    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
    friend ExactPoly operator*(ExactPoly a, const ExactPoly& b) { return a *= b; }
    friend ExactPoly operator*(ExactPoly a, const BigRational& c) { return a *= c; }
    friend ExactPoly operator*(const BigRational& c, ExactPoly a) { return a *= c; }
    ExactPoly operator-() const;

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Quotient and remainder; throws on a zero divisor.
std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& num, const ExactPoly& den);
/// Monic greatest common divisor (zero if both are zero).
ExactPoly gcd(ExactPoly a, ExactPoly b);
ExactPoly pow(const ExactPoly& p, unsigned exponent);

/// Coefficients indexed by (power of x, power of lambda); trailing zero
/// rows and columns are trimmed so equal polynomials compare equal.
class BivariatePoly {
public:
    BivariatePoly() = default;
    explicit BivariatePoly(std::vector<std::vector<BigRational>> coeffs);

    const std::vector<std::vector<BigRational>>& coefficients() const { return coeffs_; }
    BigRational coeff(std::size_t x_power, std::size_t lambda_power) const;
    std::size_t rows() const { return coeffs_.size(); }
    std::size_t cols() const { return coeffs_.empty() ? 0 : coeffs_.front().size(); }

    std::complex<double> evaluate(std::complex<double> x, std::complex<double> lambda) const;
    /// Polynomial in x obtained by fixing lambda.
    ExactPoly at_lambda(const BigRational& lambda) const;

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<std::vector<BigRational>> coeffs_;
};

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

/// B_n with B_1 = -1/2.
BigRational bernoulli(unsigned n);
BigInt stirling2(unsigned n, unsigned k);

/// phi_n(x) = sum_k S2(n,k) x^k.
ExactPoly phi_poly(unsigned n);
/// Q_p(x, lambda) = sum_k C(p,k) lambda^(p-k) phi_k(x).
BivariatePoly q_poly(unsigned p);
/// E_p(lambda) assembled from Bernoulli moments.
ExactPoly euler_poly(unsigned p);
/// F_p(n) = 1^p + ... + (n-1)^p, with 0^0 = 1.
ExactPoly faulhaber_poly(unsigned p);
/// (1 - 2^(p+1)) B_(p+1) / (p+1) = int_0^inf e^(-2t) phi_p(-t) dt.
BigRational exp_moment(unsigned p);
/// Stirling form of exp_moment: sum_k S2(p,k) k! (-1)^k / 2^(k+1).
BigRational exp_moment_stirling(unsigned p);
/// int_0^x phi_p(t) dt.
ExactPoly phi_antiderivative(unsigned p);
/// (1/(p+1)) sum_{k=1}^{p+1} C(p+1,k) B_(p+1-k) phi_k(x).
ExactPoly phi_antiderivative_bernoulli(unsigned p);
/// g_p with h_{-p}(x) = e^x g_p(x): sum_{k=1}^{p+1} S2(p+1,k) x^k / k.
ExactPoly h_neg_closed_poly(unsigned p);
/// phi_p(x) - phi_p(0) + int_0^x phi_p: the derivative-based assembly of g_p.
ExactPoly h_neg_closed_poly_via_antiderivative(unsigned p);

/// eta(-k) = sum_{n>=0} (-1)^n (n+1)^k in the Abel sense.
BigRational eta_neg_int(unsigned k);
/// eta(-p, lambda) as a polynomial in lambda:
/// lambda^p / 2 - sum_{k=1}^p C(p,k) lambda^(p-k) eta(-k).
ExactPoly eta_neg_poly(unsigned p);
/// zeta(-p): -B_(p+1)/(p+1) for p >= 1 and -1/2 at p = 0.
BigRational zeta_neg_int(unsigned p);

/// int_0^x e^(-2t) P(-t) dt = c0 - e^(-2x) C(x); returns (c0, C).
std::pair<BigRational, ExactPoly> exp2_integral_parts(const ExactPoly& p);

}  // namespace polyexp::exact

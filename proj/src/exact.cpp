#include "polyexp/exact.hpp"

#include "polyexp/types.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace polyexp::exact {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw Error(ErrorKind::domain, "rational with zero denominator");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational_literal(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) {
        throw ParseError(0, "empty rational literal");
    }
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0) {
            throw ParseError(0, "bad numerator '" + s.substr(0, slash) + "'");
        }
        if (den.set_str(s.substr(slash + 1), 10) != 0) {
            throw ParseError(slash + 1, "bad denominator '" + s.substr(slash + 1) + "'");
        }
        return make_rational(num, den);
    }
    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    std::size_t frac_digits = 0;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) {
                ++frac_digits;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            throw ParseError(pos, std::string("unexpected character '") + c + "' in rational literal");
        }
    }
    if (digits.empty()) {
        throw ParseError(pos, "rational literal has no digits");
    }
    BigInt num(digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
    return make_rational(negative ? BigInt(-num) : num, den);
}

double to_double(const BigRational& q) {
    return q.get_d();
}

// ---------------------------------------------------------------------------
// ExactPoly

ExactPoly::ExactPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

ExactPoly ExactPoly::constant(const BigRational& c) {
    return ExactPoly(std::vector<BigRational>{c});
}

ExactPoly ExactPoly::monomial(const BigRational& c, std::size_t power) {
    std::vector<BigRational> v(power + 1);
    v[power] = c;
    return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::linear_root(const BigRational& root) {
    return ExactPoly({BigRational(-root), BigRational(1)});
}

void ExactPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigRational ExactPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
}

BigRational ExactPoly::leading() const {
    return coeffs_.empty() ? BigRational(0) : coeffs_.back();
}

BigRational ExactPoly::operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::complex<double> ExactPoly::evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->get_d();
    }
    return acc;
}

ExactPoly ExactPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    }
    return ExactPoly(std::move(d));
}

ExactPoly ExactPoly::integral() const {
    if (coeffs_.empty()) {
        return {};
    }
    std::vector<BigRational> v(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        v[k + 1] = coeffs_[k] / static_cast<unsigned long>(k + 1);
    }
    return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::compose_linear(const BigRational& a, const BigRational& b) const {
    const ExactPoly lin({a, b});
    ExactPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin + ExactPoly::constant(*it);
    }
    return acc;
}

ExactPoly ExactPoly::monic() const {
    if (coeffs_.empty()) {
        return {};
    }
    ExactPoly r = *this;
    const BigRational lc = leading();
    for (auto& c : r.coeffs_) {
        c /= lc;
    }
    return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    trim();
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    trim();
    return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

ExactPoly& ExactPoly::operator*=(const BigRational& c) {
    for (auto& v : coeffs_) {
        v *= c;
    }
    trim();
    return *this;
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& num, const ExactPoly& den) {
    if (den.is_zero()) {
        throw Error(ErrorKind::domain, "polynomial division by zero");
    }
    std::vector<BigRational> rem = num.coefficients();
    const int dn = den.degree();
    if (num.degree() < dn) {
        return {ExactPoly{}, num};
    }
    std::vector<BigRational> quot(static_cast<std::size_t>(num.degree() - dn + 1));
    const BigRational lc = den.leading();
    for (int k = num.degree() - dn; k >= 0; --k) {
        const BigRational q = rem[static_cast<std::size_t>(k + dn)] / lc;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) {
            continue;
        }
        for (int j = 0; j <= dn; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= q * den.coefficients()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(dn));
    return {ExactPoly(std::move(quot)), ExactPoly(std::move(rem))};
}

ExactPoly gcd(ExactPoly a, ExactPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExactPoly pow(const ExactPoly& p, unsigned exponent) {
    ExactPoly result = ExactPoly::constant(1);
    ExactPoly base = p;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1u;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// BivariatePoly

BivariatePoly::BivariatePoly(std::vector<std::vector<BigRational>> coeffs) : coeffs_(std::move(coeffs)) {
    std::size_t width = 0;
    for (const auto& row : coeffs_) {
        width = std::max(width, row.size());
    }
    for (auto& row : coeffs_) {
        row.resize(width);
    }
    trim();
}

void BivariatePoly::trim() {
    auto row_zero = [](const std::vector<BigRational>& row) {
        return std::all_of(row.begin(), row.end(), [](const BigRational& c) { return c == 0; });
    };
    while (!coeffs_.empty() && row_zero(coeffs_.back())) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        return;
    }
    std::size_t width = coeffs_.front().size();
    while (width > 0) {
        bool zero = true;
        for (const auto& row : coeffs_) {
            if (row[width - 1] != 0) {
                zero = false;
                break;
            }
        }
        if (!zero) {
            break;
        }
        --width;
    }
    for (auto& row : coeffs_) {
        row.resize(width);
    }
}

BigRational BivariatePoly::coeff(std::size_t x_power, std::size_t lambda_power) const {
    if (x_power >= coeffs_.size() || lambda_power >= coeffs_[x_power].size()) {
        return 0;
    }
    return coeffs_[x_power][lambda_power];
}

std::complex<double> BivariatePoly::evaluate(std::complex<double> x, std::complex<double> lambda) const {
    std::complex<double> acc = 0.0;
    for (auto row = coeffs_.rbegin(); row != coeffs_.rend(); ++row) {
        std::complex<double> inner = 0.0;
        for (auto c = row->rbegin(); c != row->rend(); ++c) {
            inner = inner * lambda + c->get_d();
        }
        acc = acc * x + inner;
    }
    return acc;
}

ExactPoly BivariatePoly::at_lambda(const BigRational& lambda) const {
    std::vector<BigRational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        BigRational acc = 0;
        for (auto c = coeffs_[i].rbegin(); c != coeffs_[i].rend(); ++c) {
            acc = acc * lambda + *c;
        }
        out[i] = acc;
    }
    return ExactPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// Number sequences

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<BigRational> bernoulli_table{BigRational(1)};

std::mutex stirling_mutex;
std::vector<std::vector<BigInt>> stirling_rows{{BigInt(1)}};

}  // namespace

BigRational bernoulli(unsigned n) {
    std::lock_guard lock(bernoulli_mutex);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
    for (unsigned m = static_cast<unsigned>(bernoulli_table.size()); m <= n; ++m) {
        BigRational acc = 0;
        if (m == 1 || m % 2 == 0) {
            for (unsigned k = 0; k < m; ++k) {
                if (bernoulli_table[k] != 0) {
                    acc += BigRational(binomial(m + 1, k)) * bernoulli_table[k];
                }
            }
            acc = -acc / (m + 1);
        }
        bernoulli_table.push_back(acc);
    }
    return bernoulli_table[n];
}

BigInt stirling2(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    std::lock_guard lock(stirling_mutex);
    for (unsigned m = static_cast<unsigned>(stirling_rows.size()); m <= n; ++m) {
        const auto& prev = stirling_rows[m - 1];
        std::vector<BigInt> row(m + 1);
        row[0] = 0;
        for (unsigned j = 1; j <= m; ++j) {
            BigInt left = j < prev.size() ? BigInt(prev[j] * j) : BigInt(0);
            row[j] = left + prev[j - 1];
        }
        stirling_rows.push_back(std::move(row));
    }
    return stirling_rows[n][k];
}

ExactPoly phi_poly(unsigned n) {
    std::vector<BigRational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        c[k] = BigRational(stirling2(n, k));
    }
    return ExactPoly(std::move(c));
}

BivariatePoly q_poly(unsigned p) {
    std::vector<std::vector<BigRational>> m(p + 1, std::vector<BigRational>(p + 1));
    for (unsigned k = 0; k <= p; ++k) {
        const BigInt c = binomial(p, k);
        for (unsigned j = 0; j <= k; ++j) {
            // C(p,k) lambda^(p-k) S2(k,j) x^j
            m[j][p - k] += BigRational(c * stirling2(k, j));
        }
    }
    return BivariatePoly(std::move(m));
}

BigRational exp_moment(unsigned p) {
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, p + 1);
    return BigRational(BigInt(1 - two_pow)) * bernoulli(p + 1) / (p + 1);
}

BigRational exp_moment_stirling(unsigned p) {
    BigRational acc = 0;
    for (unsigned k = 0; k <= p; ++k) {
        BigInt two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, k + 1);
        BigRational term = make_rational(stirling2(p, k) * factorial(k), two_pow);
        acc += (k % 2 == 0) ? term : BigRational(-term);
    }
    return acc;
}

ExactPoly euler_poly(unsigned p) {
    std::vector<BigRational> c(p + 1);
    for (unsigned k = 0; k <= p; ++k) {
        c[p - k] = 2 * BigRational(binomial(p, k)) * exp_moment(k);
    }
    return ExactPoly(std::move(c));
}

ExactPoly faulhaber_poly(unsigned p) {
    std::vector<BigRational> c(p + 2);
    for (unsigned k = 1; k <= p + 1; ++k) {
        c[k] = BigRational(binomial(p + 1, k)) * bernoulli(p + 1 - k) / (p + 1);
    }
    return ExactPoly(std::move(c));
}

ExactPoly phi_antiderivative(unsigned p) {
    return phi_poly(p).integral();
}

ExactPoly phi_antiderivative_bernoulli(unsigned p) {
    ExactPoly acc;
    for (unsigned k = 1; k <= p + 1; ++k) {
        acc += phi_poly(k) * (BigRational(binomial(p + 1, k)) * bernoulli(p + 1 - k) / (p + 1));
    }
    return acc;
}

ExactPoly h_neg_closed_poly(unsigned p) {
    std::vector<BigRational> c(p + 2);
    for (unsigned k = 1; k <= p + 1; ++k) {
        c[k] = BigRational(stirling2(p + 1, k)) / k;
    }
    return ExactPoly(std::move(c));
}

ExactPoly h_neg_closed_poly_via_antiderivative(unsigned p) {
    const ExactPoly phi = phi_poly(p);
    return phi - ExactPoly::constant(phi.coeff(0)) + phi_antiderivative(p);
}

BigRational eta_neg_int(unsigned k) {
    // eta(-k) = phi_k(0) - int_0^inf e^(-2t) phi_k(-t) dt
    const BigRational boundary = k == 0 ? BigRational(1) : BigRational(0);
    return boundary - exp_moment(k);
}

ExactPoly eta_neg_poly(unsigned p) {
    std::vector<BigRational> c(p + 1);
    c[p] = BigRational(1, 2);
    for (unsigned k = 1; k <= p; ++k) {
        c[p - k] -= BigRational(binomial(p, k)) * eta_neg_int(k);
    }
    return ExactPoly(std::move(c));
}

BigRational zeta_neg_int(unsigned p) {
    if (p == 0) {
        return BigRational(-1, 2);
    }
    return -bernoulli(p + 1) / (p + 1);
}

std::pair<BigRational, ExactPoly> exp2_integral_parts(const ExactPoly& p) {
    // q(t) = p(-t); int e^(-2t) q = -e^(-2t) sum_j q^(j)(t) / 2^(j+1)
    ExactPoly q = p.compose_linear(0, -1);
    ExactPoly acc;
    BigRational scale(1, 2);
    while (!q.is_zero()) {
        acc += q * scale;
        q = q.derivative();
        scale /= 2;
    }
    return {acc.coeff(0), acc};
}

}  // namespace polyexp::exact

#include "polyexp/rational.hpp"

#include <cctype>

namespace polyexp::mellin {

using exact::BigRational;
using exact::ExactPoly;

RationalFunction RationalFunction::make(ExactPoly num, ExactPoly den) {
    if (den.is_zero()) {
        throw Error(ErrorKind::domain, "rational function with zero denominator");
    }
    if (num.is_zero()) {
        return {ExactPoly{}, ExactPoly::constant(1)};
    }
    const ExactPoly g = exact::gcd(num, den);
    if (g.degree() > 0) {
        num = exact::divmod(num, g).first;
        den = exact::divmod(den, g).first;
    }
    const BigRational lc = den.leading();
    num *= BigRational(1 / lc);
    den *= BigRational(1 / lc);
    return {std::move(num), std::move(den)};
}

Complex RationalFunction::operator()(Complex s) const { return numerator.evaluate(s) / denominator.evaluate(s); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::make(a.numerator * b.denominator + b.numerator * a.denominator,
                                  a.denominator * b.denominator);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::make(a.numerator * b.denominator - b.numerator * a.denominator,
                                  a.denominator * b.denominator);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::make(a.numerator * b.numerator, a.denominator * b.denominator);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.numerator.is_zero()) {
        throw Error(ErrorKind::domain, "division by the zero rational function");
    }
    return RationalFunction::make(a.numerator * b.denominator, a.denominator * b.numerator);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator == b.numerator && a.denominator == b.denominator;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RationalFunction parse() {
        skip();
        if (pos_ >= text_.size()) {
            throw ParseError(pos_, "empty expression");
        }
        RationalFunction r = expr();
        skip();
        if (pos_ < text_.size()) {
            throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        }
        return r;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RationalFunction term() {
        RationalFunction acc = unary();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                RationalFunction rhs = unary();
                if (rhs.numerator.is_zero()) {
                    throw ParseError(at, "division by zero");
                }
                acc = acc / rhs;
            } else {
                return acc;
            }
        }
    }

    RationalFunction unary() {
        if (accept('-')) {
            RationalFunction r = unary();
            return {-r.numerator, r.denominator};
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (pos_ == start) {
                throw ParseError(start, "exponent must be a non-negative integer");
            }
            const std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 4 || std::stoul(digits) > 1000) {
                throw ParseError(start, "exponent too large");
            }
            const auto e = static_cast<unsigned>(std::stoul(digits));
            return RationalFunction::make(exact::pow(base.numerator, e), exact::pow(base.denominator, e));
        }
        return base;
    }

    RationalFunction primary() {
        skip();
        if (pos_ >= text_.size()) {
            throw ParseError(pos_, "unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!accept(')')) {
                throw ParseError(pos_, "expected ')'");
            }
            return r;
        }
        if (c == 's') {
            ++pos_;
            return {ExactPoly::monomial(1, 1), ExactPoly::constant(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            bool point = false;
            while (pos_ < text_.size()) {
                const char d = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    ++pos_;
                } else if (d == '.' && !point) {
                    point = true;
                    ++pos_;
                } else {
                    break;
                }
            }
            const std::string_view literal = text_.substr(start, pos_ - start);
            if (literal == ".") {
                throw ParseError(start, "malformed number");
            }
            return {ExactPoly::constant(exact::parse_rational_literal(literal)), ExactPoly::constant(1)};
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string poly_string(const ExactPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const BigRational& c = p.coefficients()[k];
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += exact::to_string(c);
        if (k == 1) {
            out += "*s";
        } else if (k > 1) {
            out += "*s^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace

RationalFunction parse_rational(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const RationalFunction& r) {
    return "(" + poly_string(r.numerator) + ")/(" + poly_string(r.denominator) + ")";
}

}  // namespace polyexp::mellin

#pragma once

// Exact rational functions of a single variable s.

#include "polyexp/exact.hpp"
#include "polyexp/types.hpp"

#include <string>
#include <string_view>

namespace polyexp::mellin {

/// numerator / denominator with no common factor and a monic denominator.
struct RationalFunction {
    exact::ExactPoly numerator = exact::ExactPoly::constant(0);
    exact::ExactPoly denominator = exact::ExactPoly::constant(1);

    static RationalFunction make(exact::ExactPoly num, exact::ExactPoly den);

    Complex operator()(Complex s) const;
    bool is_polynomial() const { return denominator.degree() == 0; }
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
bool operator==(const RationalFunction& a, const RationalFunction& b);

/// Grammar (whitespace-insensitive):
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' digits)?
///     primary := number | 's' | '(' expr ')'
/// Numbers are integers or decimals and are read exactly. Errors carry the byte offset.
RationalFunction parse_rational(std::string_view text);

/// "(num)/(den)" with coefficients as "n/d" strings, for diagnostics.
std::string to_string(const RationalFunction& r);

}  // namespace polyexp::mellin

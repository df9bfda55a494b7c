#pragma once

// Inverse Mellin transforms (1/2 pi i) int_(c) x^(-s) R(s) Gamma(s) ds of a
// rational R, written through partial fractions as polyexponentials
// e_p(-x, lambda) plus an exponential-polynomial part.

#include "polyexp/rational.hpp"
#include "polyexp/types.hpp"

#include <string>
#include <vector>

namespace polyexp::mellin {

/// coeff / (pole - s)^order
struct PoleTerm {
    Complex pole;
    unsigned order = 1;
    Complex coeff;
    /// True when the pole and coefficient were found in exact arithmetic.
    bool exact = false;
};

struct PartialFractions {
    /// Polynomial part as sum_k a_k (-s)^k.
    std::vector<exact::BigRational> poly_part;
    std::vector<PoleTerm> pole_terms;

    Complex operator()(Complex s) const;
};

/// Exact division for the polynomial part. Poles of the square-free factors
/// come from the rational-root theorem, the quadratic formula, or companion
/// matrix eigenvalues polished by Newton's method. Roots closer than 1e-8 are
/// merged; closer than 1e-5 but not merged raises ill_conditioned.
PartialFractions partial_fractions(const RationalFunction& r);

struct PolyexpTerm {
    Complex coeff;
    unsigned p = 1;
    Complex lambda;
};

/// coeff * Gamma(pole) * x^(-pole), one per pole crossed while moving the line.
struct ResidueTerm {
    Complex coeff;
    Complex pole;
};

struct MellinExpression {
    /// a_k with contribution e^(-x) sum_k a_k phi_k(-x).
    std::vector<exact::BigRational> exp_poly;
    std::vector<PolyexpTerm> terms;
    std::vector<ResidueTerm> residues;
    double c = 1.0;
    /// Set when R has real coefficients, so the value must be real.
    bool real_valued = true;
};

/// Requires Re(pole) > c > 0 for every pole.
MellinExpression eval_theorem63(const RationalFunction& r, double c);

/// The integral along Re s = c, obtained on the line c_new and corrected by
/// the residues of the simple poles with c_new < Re(pole) < c.
MellinExpression shift_adjust(const RationalFunction& r, double c, double c_new);

EvalResult eval_expression(const MellinExpression& e, double x, double tol = 1e-12);

/// Half-height T whose tail bound is below tol / 10.
double line_integral_height(const RationalFunction& r, double x, double c, double tol = 1e-10);

/// (1/2 pi) int_(-T)^(T) x^(-(c+it)) R(c+it) Gamma(c+it) dt with the tail bound in abs_err.
EvalResult oracle_line_integral(const RationalFunction& r, double x, double c, double half_height,
                                double tol = 1e-10);

/// {"exp_poly": [...], "terms": [...], "c": ...} plus "residues" when present.
std::string to_json(const MellinExpression& e);

}  // namespace polyexp::mellin

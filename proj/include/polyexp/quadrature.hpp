#pragma once

// Quadrature primitives for complex-valued integrands of a real variable.

#include "polyexp/types.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace polyexp::quad {

using ComplexFn = std::function<Complex(double)>;

struct QuadResult {
    Complex value{};
    double abs_err = 0.0;
    std::int64_t evals = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b]. The local error is the
/// full |K15 - G7| difference. Stops once the summed error is below
/// max(epsabs, epsrel |I|).
QuadResult gauss_kronrod(const ComplexFn& f, double a, double b, double epsabs, double epsrel,
                         int max_intervals = 4000);

/// Tanh-sinh on [a, b]; nodes cluster double-exponentially at both ends,
/// which handles integrable endpoint singularities such as t^(alpha-1) at a = 0.
/// Levels halve the step; the error estimate is the last level difference.
QuadResult tanh_sinh(const ComplexFn& f, double a, double b, double epsabs, double epsrel,
                     int max_levels = 12);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
const std::vector<std::pair<double, double>>& gauss_legendre_rule(int n);

/// Composite Gauss-Legendre with equal panels.
Complex gauss_legendre_panels(const ComplexFn& f, double a, double b, int panels, int order = 16);

}  // namespace polyexp::quad

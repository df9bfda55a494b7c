#pragma once

// Gamma-family kernels used throughout: complex Gamma, the lower incomplete
// gamma function and the entire exponential integral Ein.

#include "polyexp/types.hpp"

namespace polyexp {

/// sin(pi z) with the real part reduced first, so zeros at integers are exact.
Complex sin_pi(Complex z);

/// log Gamma(z) for Re z >= 1/2 (Lanczos, g = 7).
Complex log_gamma(Complex z);

/// Complex Gamma; reflection below Re z = 1/2. Throws a pole error at
/// non-positive integers.
Complex gamma_fn(Complex z);

/// 1/Gamma(z), entire; exactly zero at non-positive integers.
Complex rgamma(Complex z);

/// Rising factorial (s)_m computed as a product.
Complex rising_factorial(Complex s, unsigned m);

/// gamma(lambda, x) = int_0^x t^(lambda-1) e^(-t) dt for Re lambda > 0, x >= 0.
EvalResult lower_inc_gamma(Complex lambda, double x, double tol = default_tol);

/// Ein(z) = sum_{k>=1} (-1)^(k-1) z^k / (k! k).
Complex ein(Complex z);

}  // namespace polyexp

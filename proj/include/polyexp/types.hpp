#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyexp {

using Complex = std::complex<double>;

enum class Method {
    series,
    closed_form,
    incgamma,
    ein,
    recursion,
    hankel,
    taylor_shift,
    asymptotic,
    mellin_integral,
    quadrature,
};

std::string_view to_string(Method m);

/// Numeric value with an absolute error estimate and the route that produced it.
struct EvalResult {
    Complex value{};
    double abs_err = 0.0;
    std::int64_t work = 0;
    Method method = Method::series;
};

enum class ErrorKind {
    domain,
    pole,
    convergence,
    parse,
    precondition,
    unsupported,
    ill_conditioned,
    overflow,
    contour,
};

std::string_view to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::parse, what + " at byte " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double default_tol = 1e-12;

/// True when z is exactly a real integer.
inline bool is_integer(Complex z) {
    return z.imag() == 0.0 && std::isfinite(z.real()) && std::floor(z.real()) == z.real();
}

}  // namespace polyexp

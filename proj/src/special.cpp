#include "polyexp/special.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace polyexp {

namespace {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coeffs = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

const double half_log_two_pi = 0.5 * std::log(2.0 * pi);

void check_pole(Complex z) {
    if (is_integer(z) && z.real() <= 0.0) {
        throw Error(ErrorKind::pole, "Gamma has a pole at z = " + std::to_string(z.real()));
    }
}

}  // namespace

Complex sin_pi(Complex z) {
    const double n = std::round(z.real());
    const Complex reduced(z.real() - n, z.imag());
    const Complex v = std::sin(pi * reduced);
    return std::fmod(std::abs(n), 2.0) == 1.0 ? -v : v;
}

Complex log_gamma(Complex z) {
    const Complex zm = z - 1.0;
    Complex a = lanczos_coeffs[0];
    for (std::size_t i = 1; i < lanczos_coeffs.size(); ++i) {
        a += lanczos_coeffs[i] / (zm + static_cast<double>(i));
    }
    const Complex t = zm + lanczos_g + 0.5;
    return half_log_two_pi + (zm + 0.5) * std::log(t) - t + std::log(a);
}

Complex gamma_fn(Complex z) {
    check_pole(z);
    if (z.imag() == 0.0 && z.real() >= 1.0 && z.real() <= 171.0 && z.real() == std::floor(z.real())) {
        double f = 1.0;
        for (int k = 2; k < static_cast<int>(z.real()); ++k) {
            f *= k;
        }
        return f;
    }
    if (z.imag() == 0.0) {
        return std::tgamma(z.real());
    }
    if (z.real() < 0.5) {
        return pi / (sin_pi(z) * std::exp(log_gamma(1.0 - z)));
    }
    return std::exp(log_gamma(z));
}

Complex rgamma(Complex z) {
    if (is_integer(z) && z.real() <= 0.0) {
        return 0.0;
    }
    if (z.real() < 0.5) {
        return sin_pi(z) * std::exp(log_gamma(1.0 - z)) / pi;
    }
    return 1.0 / gamma_fn(z);
}

Complex rising_factorial(Complex s, unsigned m) {
    Complex acc = 1.0;
    for (unsigned j = 0; j < m; ++j) {
        acc *= s + static_cast<double>(j);
    }
    return acc;
}

EvalResult lower_inc_gamma(Complex lambda, double x, double tol) {
    if (!(lambda.real() > 0.0)) {
        throw Error(ErrorKind::domain, "lower incomplete gamma needs Re lambda > 0");
    }
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw Error(ErrorKind::domain, "lower incomplete gamma needs finite x >= 0");
    }
    if (x == 0.0) {
        return {0.0, 0.0, 0, Method::incgamma};
    }
    // gamma(a, x) = x^a e^(-x) sum_n x^n / (a (a+1) ... (a+n))
    const Complex prefactor = std::exp(lambda * std::log(x) - x);
    const double scale = std::abs(prefactor);
    Complex term = 1.0 / lambda;
    Complex sum = term;
    double abs_sum = std::abs(term);
    std::int64_t n = 0;
    double tail = std::numeric_limits<double>::infinity();
    constexpr std::int64_t cap = 100000;
    while (n < cap) {
        const double ratio = x / std::abs(lambda + static_cast<double>(n + 1));
        const double next = std::abs(term) * ratio;
        if (ratio <= 0.5) {
            tail = next / (1.0 - ratio);
            if ((scale * tail <= tol && tail <= std::numeric_limits<double>::epsilon() * abs_sum) || tail <= 1e-17 * abs_sum) {
                break;
            }
        }
        ++n;
        term *= x / (lambda + static_cast<double>(n));
        sum += term;
        abs_sum += std::abs(term);
    }
    if (n >= cap) {
        throw Error(ErrorKind::convergence, "lower incomplete gamma series did not converge");
    }
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * abs_sum * static_cast<double>(n + 1);
    return {prefactor * sum, scale * (tail + rounding), n + 1, Method::incgamma};
}

Complex ein(Complex z) {
    const double r = std::abs(z);
    if (r == 0.0) {
        return 0.0;
    }
    if (z.real() > 0.0 && r > 20.0) {
        // Ein(z) = E1(z) + Log z + gamma, E1 by its continued fraction (modified Lentz)
        Complex b = z + 1.0;
        Complex c = 1.0 / 1e-300;
        Complex d = 1.0 / b;
        Complex h = d;
        for (int i = 1; i < 1000; ++i) {
            const double an = -double(i) * i;
            b += 2.0;
            d = 1.0 / (an * d + b);
            c = b + an / c;
            const Complex del = c * d;
            h *= del;
            if (std::abs(del - 1.0) <= 1e-16) {
                return h * std::exp(-z) + std::log(z) + euler_gamma;
            }
        }
        throw Error(ErrorKind::convergence, "E1 continued fraction did not converge");
    }
    if (r > 700.0) {
        throw Error(ErrorKind::overflow, "Ein series overflows for |z| > 700");
    }
    constexpr int cap = 100000;
    if (z.real() <= 0.0 || r <= 4.0) {
        // direct series
        Complex power = 1.0;  // z^k / k!
        Complex sum = 0.0;
        for (int k = 1; k < cap; ++k) {
            power *= z / static_cast<double>(k);
            const Complex term = power / static_cast<double>(k);
            sum += (k % 2 == 1) ? term : -term;
            if (k >= 2 * r && std::abs(term) <= 1e-17 * std::abs(sum)) {
                return sum;
            }
        }
    } else {
        // Ein(z) = e^(-z) sum_{n>=1} H_n z^n / n!
        Complex power = 1.0;
        Complex sum = 0.0;
        double harmonic = 0.0;
        for (int n = 1; n < cap; ++n) {
            power *= z / static_cast<double>(n);
            harmonic += 1.0 / n;
            const Complex term = harmonic * power;
            sum += term;
            if (n >= 2 * r && std::abs(term) <= 1e-17 * std::abs(sum)) {
                return std::exp(-z) * sum;
            }
        }
    }
    throw Error(ErrorKind::convergence, "Ein series did not converge");
}

}  // namespace polyexp

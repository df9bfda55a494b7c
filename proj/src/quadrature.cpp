#include "polyexp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>

namespace polyexp::quad {

namespace {

constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double a;
    double b;
    Complex value;
    double err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment kronrod_segment(const ComplexFn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const Complex fc = f(c);
    Complex k = wgk[7] * fc;
    Complex g = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[static_cast<std::size_t>(j)];
        const Complex f1 = f(c - dx);
        const Complex f2 = f(c + dx);
        k += wgk[static_cast<std::size_t>(j)] * (f1 + f2);
        if (j % 2 == 1) {
            g += wg[static_cast<std::size_t>(j / 2)] * (f1 + f2);
        }
    }
    k *= h;
    g *= h;
    double err = std::abs(k - g);
    if (!std::isfinite(std::abs(k))) {
        err = std::numeric_limits<double>::infinity();
    }
    return {a, b, k, err};
}

}  // namespace

QuadResult gauss_kronrod(const ComplexFn& f, double a, double b, double epsabs, double epsrel,
                         int max_intervals) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Segment> heap;
    Segment first = kronrod_segment(f, a, b);
    out.evals = 15;
    Complex total = first.value;
    double total_err = first.err;
    heap.push(first);
    int intervals = 1;
    while (true) {
        const double target = std::max(epsabs, epsrel * std::abs(total));
        if (total_err <= target) {
            out.converged = true;
            break;
        }
        if (intervals >= max_intervals) {
            break;
        }
        Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            break;
        }
        heap.pop();
        Segment left = kronrod_segment(f, worst.a, mid);
        Segment right = kronrod_segment(f, mid, worst.b);
        out.evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++intervals;
        if (intervals % 64 == 0) {
            // resum to limit drift from repeated updates
            Complex v = 0.0;
            double e = 0.0;
            auto copy = heap;
            while (!copy.empty()) {
                v += copy.top().value;
                e += copy.top().err;
                copy.pop();
            }
            total = v;
            total_err = e;
        }
    }
    out.value = total;
    out.abs_err = std::max(total_err, 0.0);
    return out;
}

QuadResult tanh_sinh(const ComplexFn& f, double a, double b, double epsabs, double epsrel,
                     int max_levels) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    const double len = b - a;
    constexpr double t_max = 6.5;
    auto node = [&](double t) -> Complex {
        const double u = pi * std::sinh(t);
        const double ch = std::cosh(0.5 * u);
        const double w = len * pi * std::cosh(t) / (4.0 * ch * ch);
        if (!(w > 1e-300)) {
            return 0.0;
        }
        double x;
        if (u < 0.0) {
            const double d = len / (1.0 + std::exp(-u));
            if (!(d > 0.0)) {
                return 0.0;
            }
            x = a + d;
        } else {
            const double d = len / (1.0 + std::exp(u));
            if (!(d > 0.0)) {
                return 0.0;
            }
            x = b - d;
        }
        if (x <= a || x >= b) {
            return 0.0;
        }
        ++out.evals;
        return w * f(x);
    };

    double h = 1.0;
    Complex sum = node(0.0);
    for (int k = 1; k * h <= t_max; ++k) {
        sum += node(k * h) + node(-k * h);
    }
    Complex estimate = h * sum;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        Complex added = 0.0;
        for (int k = 1; k * h <= t_max; k += 2) {
            added += node(k * h) + node(-k * h);
        }
        sum += added;
        const Complex next = h * sum;
        err = std::abs(next - estimate);
        estimate = next;
        if (level >= 3 && err <= std::max(epsabs, epsrel * std::abs(estimate))) {
            out.converged = true;
            break;
        }
    }
    out.value = estimate;
    out.abs_err = err;
    return out;
}

const std::vector<std::pair<double, double>>& gauss_legendre_rule(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    std::vector<std::pair<double, double>> rule(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule[static_cast<std::size_t>(i)] = {-x, w};
        rule[static_cast<std::size_t>(n - 1 - i)] = {x, w};
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

Complex gauss_legendre_panels(const ComplexFn& f, double a, double b, int panels, int order) {
    const auto& rule = gauss_legendre_rule(order);
    const double width = (b - a) / panels;
    Complex total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double c = lo + 0.5 * width;
        Complex acc = 0.0;
        for (const auto& [x, w] : rule) {
            acc += w * f(c + 0.5 * width * x);
        }
        total += 0.5 * width * acc;
    }
    return total;
}

}  // namespace polyexp::quad

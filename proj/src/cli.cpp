#include "polyexp/cli.hpp"

#include "polyexp/checks.hpp"
#include "polyexp/format.hpp"
#include "polyexp/mellin.hpp"
#include "polyexp/polyexp.hpp"
#include "polyexp/series.hpp"
#include "polyexp/transforms.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

namespace polyexp::cli {

namespace {

/// Flag value problems found after CLI11 has parsed the command line.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_real(std::string_view text, std::size_t offset) {
    const std::string buf(text);
    if (buf.empty()) {
        throw ParseError(offset, "expected a number");
    }
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(buf.c_str(), &end);
    if (end == buf.c_str()) {
        throw ParseError(offset, "expected a number");
    }
    if (static_cast<std::size_t>(end - buf.c_str()) != buf.size()) {
        throw ParseError(offset + static_cast<std::size_t>(end - buf.c_str()), "trailing characters in number");
    }
    if (errno == ERANGE || !std::isfinite(v)) {
        throw ParseError(offset, "number out of range");
    }
    return v;
}

std::string result_json(const EvalResult& r) {
    return "{\"value\": " + format_complex(r.value) + ", \"abs_err\": " + format_double(r.abs_err) +
           ", \"method\": " + json_quote(to_string(r.method)) + ", \"work\": " + std::to_string(r.work) + "}";
}

Complex complex_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_complex(text);
    } catch (const ParseError& e) {
        throw UsageError("--" + flag + ": " + e.what());
    }
}

double real_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_real(text, 0);
    } catch (const ParseError& e) {
        throw UsageError("--" + flag + ": " + e.what());
    }
}

unsigned nonpositive_order(Complex s, const std::string& method) {
    if (!is_integer(s) || s.real() > 0.0) {
        throw UsageError("--method " + method + " needs a non-positive integer s");
    }
    return static_cast<unsigned>(-s.real());
}

unsigned positive_order(Complex s, const std::string& method) {
    if (!is_integer(s) || s.real() < 1.0) {
        throw UsageError("--method " + method + " needs a positive integer s");
    }
    return static_cast<unsigned>(s.real());
}

std::string csv_double(double v) { return std::isfinite(v) ? format_double(v) : "nan"; }

/// Evaluates f at every index on a few threads; results keep index order.
template <class F>
std::vector<std::pair<EvalResult, std::string>> parallel_grid(std::size_t n, F f) {
    std::vector<std::pair<EvalResult, std::string>> out(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i].first = f(i);
            } catch (const std::exception& e) {
                out[i].first.value = Complex(std::nan(""), std::nan(""));
                out[i].first.abs_err = std::nan("");
                out[i].second = e.what();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(threads, n); ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    return out;
}

struct Flags {
    double tol = default_tol;
    // eval, zeta, eta, lerch, series
    std::string s, lambda = "1", x, w = "1", method = "auto", route = "eta";
    // mellin
    std::string rational, c;
    std::string c_new;
    bool verify = false;
    // series
    std::string borel_grid;
    // check
    std::string suite = "all";
    // table
    std::string function, s_range, x_range, lambda_range = "1:1:1";
};

int do_eval(const Flags& f, std::ostream& out) {
    const Complex s = complex_flag("s", f.s);
    const Complex lambda = complex_flag("lambda", f.lambda);
    const Complex x = complex_flag("x", f.x);
    EvalResult r;
    if (f.method == "auto") {
        r = evaluate(s, lambda, x, f.tol);
    } else if (f.method == "series") {
        r = eval_series(s, lambda, x, f.tol);
    } else if (f.method == "hankel") {
        r = eval_hankel(s, lambda, x, f.tol);
    } else if (f.method == "recursion") {
        r = eval_via_recursion(positive_order(s, f.method), lambda, x, std::max(f.tol, 1e-13));
    } else {
        const Complex v = eval_negint(nonpositive_order(s, f.method), lambda, x);
        r = {v, 8.0 * std::numeric_limits<double>::epsilon() * std::abs(v), 1, Method::closed_form};
    }
    out << result_json(r) << "\n";
    return exit_ok;
}

int do_zeta(const Flags& f, std::ostream& out, bool have_lambda) {
    const Complex s = complex_flag("s", f.s);
    EvalResult r;
    if (have_lambda) {
        r = hurwitz_zeta(s, complex_flag("lambda", f.lambda), std::max(f.tol, 1e-14));
    } else {
        r = riemann_zeta(s, f.route == "laplace" ? ZetaRoute::laplace : ZetaRoute::eta, std::max(f.tol, 1e-14));
    }
    out << result_json(r) << "\n";
    return exit_ok;
}

int do_eta(const Flags& f, std::ostream& out) {
    const Complex s = complex_flag("s", f.s);
    const Complex lambda = complex_flag("lambda", f.lambda);
    EvalResult r;
    if (f.method == "hankel") {
        r = eta_hankel(s, lambda, std::max(f.tol, 1e-14));
    } else if (f.method == "series") {
        r = eta_alternating(s, lambda);
    } else {
        r = eta(s, lambda, std::max(f.tol, 1e-14));
    }
    out << result_json(r) << "\n";
    return exit_ok;
}

int do_lerch(const Flags& f, std::ostream& out) {
    const Complex x = complex_flag("x", f.x);
    const Complex s = complex_flag("s", f.s);
    const Complex lambda = complex_flag("lambda", f.lambda);
    const EvalResult r = f.method == "series" ? lerch_phi_series(x, s, lambda, f.tol)
                                              : lerch_phi(x, s, lambda, std::max(f.tol, 1e-14));
    out << result_json(r) << "\n";
    return exit_ok;
}

int do_mellin(const Flags& f, std::ostream& out) {
    const double x = real_flag("x", f.x);
    const double c = real_flag("c", f.c);
    if (!(x > 0.0)) {
        throw UsageError("--x must be positive");
    }
    if (!(c > 0.0)) {
        throw UsageError("--c must be positive");
    }
    const mellin::RationalFunction r = mellin::parse_rational(f.rational);
    const mellin::MellinExpression e =
        f.c_new.empty() ? mellin::eval_theorem63(r, c) : mellin::shift_adjust(r, c, real_flag("c-new", f.c_new));
    const EvalResult v = mellin::eval_expression(e, x, std::max(f.tol, 1e-14));
    out << "{\"rational\": " << json_quote(mellin::to_string(r)) << ", \"expression\": " << mellin::to_json(e)
        << ", \"x\": " << format_double(x) << ", \"value\": " << format_complex(v.value)
        << ", \"abs_err\": " << format_double(v.abs_err);
    if (f.verify) {
        const double oracle_tol = std::max(f.tol, 1e-10);
        const double height = mellin::line_integral_height(r, x, c, oracle_tol);
        const EvalResult o = mellin::oracle_line_integral(r, x, c, height, oracle_tol);
        out << ", \"oracle\": " << format_complex(o.value) << ", \"oracle_abs_err\": " << format_double(o.abs_err)
            << ", \"half_height\": " << format_double(height)
            << ", \"discrepancy\": " << format_double(std::abs(o.value - v.value));
    }
    out << "}\n";
    return exit_ok;
}

std::vector<double> parse_grid_list(const std::string& text) {
    std::vector<double> grid;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        try {
            grid.push_back(parse_real(std::string_view(text).substr(start, comma - start), start));
        } catch (const ParseError& e) {
            throw UsageError(std::string("--borel: ") + e.what());
        }
        start = comma + 1;
    }
    return grid;
}

int do_series(const Flags& f, std::ostream& out) {
    const Complex s = complex_flag("s", f.s);
    const Complex lambda = complex_flag("lambda", f.lambda);
    const Complex w = complex_flag("w", f.w);
    if (!f.borel_grid.empty()) {
        const auto pts = borel_probe(s, lambda, w, parse_grid_list(f.borel_grid), std::max(f.tol, 1e-14));
        out << "{\"borel\": [";
        for (std::size_t k = 0; k < pts.size(); ++k) {
            out << (k ? ", " : "") << "{\"x\": " << format_double(pts[k].x)
                << ", \"value\": " << format_complex(pts[k].value) << ", \"target\": " << format_complex(pts[k].target)
                << ", \"error\": " << format_double(std::abs(pts[k].value - pts[k].target))
                << ", \"abs_err\": " << format_double(pts[k].abs_err) << "}";
        }
        out << "]}\n";
        return exit_ok;
    }
    const Complex x = complex_flag("x", f.x);
    const HSeriesParams p{s, lambda, w, x};
    EvalResult r;
    if (f.method == "auto" || f.method == "direct") {
        r = h_direct(p, f.tol);
    } else if (f.method == "quadrature") {
        r = h_quadrature(p, std::max(f.tol, 1e-13));
    } else {
        const double eps = std::numeric_limits<double>::epsilon();
        if (lambda != 1.0) {
            throw UsageError("--method closed needs lambda = 1");
        }
        if (s == 1.0) {
            const Complex v = h1_closed(w, x);
            r = {v, 64.0 * eps * std::abs(v), 1, Method::closed_form};
        } else if (w == 1.0) {
            const Complex v = h_neg_eval(nonpositive_order(s, f.method), x);
            r = {v, 16.0 * eps * std::abs(v), 1, Method::closed_form};
        } else if (w == -1.0 && x.imag() == 0.0) {
            r = h_neg_alt_eval(nonpositive_order(s, f.method), x.real());
        } else {
            throw UsageError("--method closed covers s = 1, or s = -p with w = 1 or w = -1 and real x");
        }
    }
    out << result_json(r) << "\n";
    return exit_ok;
}

int do_check(const Flags& f, std::ostream& out) {
    const auto& names = checks::suite_names();
    if (f.suite != "all" && std::find(names.begin(), names.end(), f.suite) == names.end()) {
        throw UsageError("--suite must be one of exact, routes, transforms, mellin, series, all");
    }
    const auto records = checks::run_suite(f.suite);
    out << checks::to_json(f.suite, records) << "\n";
    return checks::all_passed(records) ? exit_ok : exit_check_failed;
}

std::vector<double> range_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_range(text);
    } catch (const ParseError& e) {
        throw UsageError("--" + flag + ": " + e.what());
    }
}

int do_table(const Flags& f, std::ostream& out, std::ostream& err) {
    struct Point {
        double s, lambda, x;
    };
    std::vector<Point> pts;
    std::string header;
    std::function<EvalResult(const Point&)> eval;
    std::function<std::string(const Point&)> inputs;
    const double tol = f.tol;
    if (f.s_range.empty()) {
        throw UsageError("--s-range is required");
    }
    const auto ss = range_flag("s-range", f.s_range);
    const auto ls = range_flag("lambda-range", f.lambda_range);
    if (f.function == "zeta" || f.function == "eta") {
        const bool hurwitz_grid = f.function == "eta";
        for (double s : ss) {
            for (double l : hurwitz_grid ? ls : std::vector<double>{1.0}) {
                pts.push_back({s, l, 0.0});
            }
        }
        if (f.function == "zeta") {
            header = "s";
            eval = [tol](const Point& p) { return riemann_zeta(p.s, ZetaRoute::eta, std::max(tol, 1e-14)); };
            inputs = [](const Point& p) { return csv_double(p.s); };
        } else {
            header = "s,lambda";
            eval = [tol](const Point& p) { return eta(p.s, p.lambda, std::max(tol, 1e-14)); };
            inputs = [](const Point& p) { return csv_double(p.s) + "," + csv_double(p.lambda); };
        }
    } else if (f.function == "polyexp" || f.function == "h") {
        if (f.x_range.empty()) {
            throw UsageError("--x-range is required");
        }
        const auto xs = range_flag("x-range", f.x_range);
        for (double s : ss) {
            for (double l : ls) {
                for (double x : xs) {
                    pts.push_back({s, l, x});
                }
            }
        }
        inputs = [](const Point& p) {
            return csv_double(p.s) + "," + csv_double(p.lambda) + "," + csv_double(p.x);
        };
        if (f.function == "polyexp") {
            header = "s,lambda,x";
            eval = [tol](const Point& p) { return evaluate(p.s, p.lambda, p.x, tol); };
        } else {
            const Complex w = complex_flag("w", f.w);
            header = "s,lambda,w,x";
            eval = [tol, w](const Point& p) { return h_direct({p.s, p.lambda, w, p.x}, tol); };
            inputs = [w](const Point& p) {
                return csv_double(p.s) + "," + csv_double(p.lambda) + "," + csv_double(w.real()) + "," +
                       csv_double(p.x);
            };
        }
    } else {
        throw UsageError("--function must be one of polyexp, zeta, eta, h");
    }

    const auto rows = parallel_grid(pts.size(), [&](std::size_t i) { return eval(pts[i]); });
    out << header << ",value_re,value_im,abs_err\n";
    int status = exit_ok;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const EvalResult& r = rows[i].first;
        out << inputs(pts[i]) << "," << csv_double(r.value.real()) << "," << csv_double(r.value.imag()) << ","
            << csv_double(r.abs_err) << "\n";
        if (!rows[i].second.empty()) {
            err << "row " << i + 1 << ": " << rows[i].second << "\n";
            status = exit_evaluation;
        }
    }
    return status;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) {
        ++lead;
    }
    std::size_t stop = text.size();
    while (stop > lead && std::isspace(static_cast<unsigned char>(text[stop - 1]))) {
        --stop;
    }
    const std::string_view t = text.substr(lead, stop - lead);
    if (t.empty()) {
        throw ParseError(lead, "empty complex literal");
    }
    if (t.back() != 'i' && t.back() != 'j') {
        return {parse_real(t, lead), 0.0};
    }
    const std::string_view body = t.substr(0, t.size() - 1);
    // The imaginary part starts at the last sign that is not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 0;) {
        if ((body[k] == '+' || body[k] == '-') && (k == 0 || (body[k - 1] != 'e' && body[k - 1] != 'E'))) {
            split = k;
            break;
        }
    }
    const std::size_t cut = split == std::string_view::npos ? 0 : split;
    const std::string_view re_text = body.substr(0, cut);
    const std::string_view im_text = body.substr(cut);
    double im = 0.0;
    if (im_text.empty() || im_text == "+") {
        im = 1.0;
    } else if (im_text == "-") {
        im = -1.0;
    } else {
        im = parse_real(im_text, lead + cut);
    }
    const double re = re_text.empty() ? 0.0 : parse_real(re_text, lead);
    return {re, im};
}

std::vector<double> parse_range(std::string_view text) {
    const std::size_t a = text.find(':');
    const std::size_t b = a == std::string_view::npos ? a : text.find(':', a + 1);
    if (a == std::string_view::npos || b == std::string_view::npos || text.find(':', b + 1) != std::string_view::npos) {
        throw ParseError(0, "range must look like start:stop:count");
    }
    const double start = parse_real(text.substr(0, a), 0);
    const double stop = parse_real(text.substr(a + 1, b - a - 1), a + 1);
    const std::string_view count_text = text.substr(b + 1);
    if (count_text.empty() || !std::all_of(count_text.begin(), count_text.end(),
                                           [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        throw ParseError(b + 1, "count must be a positive integer");
    }
    if (count_text.size() > 7) {
        throw ParseError(b + 1, "count is too large");
    }
    const int count = std::stoi(std::string(count_text));
    if (count < 1) {
        throw ParseError(b + 1, "count must be a positive integer");
    }
    if (count == 1) {
        if (start != stop) {
            throw ParseError(0, "a single-point range needs start = stop");
        }
        return {start};
    }
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        out[static_cast<std::size_t>(k)] = k + 1 == count ? stop : start + (stop - start) * k / (count - 1);
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (const char* cap = std::getenv("POLYEXP_MAX_TERMS")) {
        char* end = nullptr;
        const long long v = std::strtoll(cap, &end, 10);
        if (end == cap || *end != '\0' || v < 1) {
            err << "error: POLYEXP_MAX_TERMS must be a positive integer\n";
            return exit_usage;
        }
        set_series_term_cap(v);
    }

    Flags f;
    CLI::App app{"Polyexponential functions, zeta transforms and Mellin-Barnes inversion", "polyexp"};
    app.require_subcommand(1);
    app.add_option("--tol", f.tol, "absolute tolerance")->check(CLI::PositiveNumber);

    auto* eval_cmd = app.add_subcommand("eval", "e_s(x, lambda)");
    eval_cmd->add_option("--s", f.s, "order s (complex)")->required();
    eval_cmd->add_option("--lambda", f.lambda, "shift lambda (complex, Re > 0)");
    eval_cmd->add_option("--x", f.x, "argument x (complex)")->required();
    eval_cmd->add_option("--method", f.method)->check(CLI::IsMember({"auto", "series", "hankel", "recursion", "negint"}));

    auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta, or Hurwitz zeta with --lambda");
    zeta_cmd->add_option("--s", f.s)->required();
    auto* zeta_lambda = zeta_cmd->add_option("--lambda", f.lambda);
    zeta_cmd->add_option("--route", f.route)->check(CLI::IsMember({"eta", "laplace"}));

    auto* eta_cmd = app.add_subcommand("eta", "alternating zeta eta(s, lambda)");
    eta_cmd->add_option("--s", f.s)->required();
    eta_cmd->add_option("--lambda", f.lambda);
    eta_cmd->add_option("--method", f.method)->check(CLI::IsMember({"auto", "integral", "hankel", "series"}));

    auto* lerch_cmd = app.add_subcommand("lerch", "Lerch transcendent Phi(x, s, lambda)");
    lerch_cmd->add_option("--x", f.x)->required();
    lerch_cmd->add_option("--s", f.s)->required();
    lerch_cmd->add_option("--lambda", f.lambda);
    lerch_cmd->add_option("--method", f.method)->check(CLI::IsMember({"auto", "integral", "series"}));

    auto* mellin_cmd = app.add_subcommand("mellin", "inverse Mellin transform of R(s) Gamma(s)");
    mellin_cmd->add_option("--rational", f.rational, "rational function of s")->required();
    mellin_cmd->add_option("--x", f.x)->required();
    mellin_cmd->add_option("--c", f.c, "abscissa of the vertical line")->required();
    mellin_cmd->add_option("--c-new", f.c_new, "move the line to c-new and add residues");
    mellin_cmd->add_flag("--verify", f.verify, "also run the line-integral oracle");

    auto* series_cmd = app.add_subcommand("series", "h_s(x, lambda, w)");
    series_cmd->add_option("--s", f.s)->required();
    series_cmd->add_option("--lambda", f.lambda);
    series_cmd->add_option("--w", f.w);
    auto* series_x = series_cmd->add_option("--x", f.x);
    auto* series_borel = series_cmd->add_option("--borel", f.borel_grid, "comma-separated ascending x grid");
    series_x->excludes(series_borel);
    series_cmd->add_option("--method", f.method)->check(CLI::IsMember({"auto", "direct", "quadrature", "closed"}));

    auto* check_cmd = app.add_subcommand("check", "identity suites");
    check_cmd->add_option("--suite", f.suite);

    auto* table_cmd = app.add_subcommand("table", "CSV over a parameter grid");
    table_cmd->add_option("--function", f.function)->required();
    table_cmd->add_option("--s-range", f.s_range);
    table_cmd->add_option("--x-range", f.x_range);
    table_cmd->add_option("--lambda-range", f.lambda_range);
    table_cmd->add_option("--w", f.w, "w for --function h");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (eval_cmd->parsed()) {
            return do_eval(f, out);
        }
        if (zeta_cmd->parsed()) {
            return do_zeta(f, out, zeta_lambda->count() > 0);
        }
        if (eta_cmd->parsed()) {
            return do_eta(f, out);
        }
        if (lerch_cmd->parsed()) {
            return do_lerch(f, out);
        }
        if (mellin_cmd->parsed()) {
            return do_mellin(f, out);
        }
        if (series_cmd->parsed()) {
            if (f.x.empty() && f.borel_grid.empty()) {
                throw UsageError("series needs --x or --borel");
            }
            return do_series(f, out);
        }
        if (check_cmd->parsed()) {
            return do_check(f, out);
        }
        return do_table(f, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        if (e.kind() == ErrorKind::parse) {
            return exit_usage;
        }
        if (e.kind() == ErrorKind::precondition) {
            return exit_precondition;
        }
        return exit_evaluation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_evaluation;
    }
}

}  // namespace polyexp::cli

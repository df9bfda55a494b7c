#include "polyexp/cli.hpp"
#include "polyexp/exact.hpp"
#include "polyexp/polyexp.hpp"
#include "polyexp/series.hpp"

#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

using namespace polyexp;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Complex value_of(const json& j) { return {j["value"][0].get<double>(), j["value"][1].get<double>()}; }

std::vector<std::vector<std::string>> csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("complex literals") {
    CHECK(cli::parse_complex("2") == Complex(2.0, 0.0));
    CHECK(cli::parse_complex("-0.5") == Complex(-0.5, 0.0));
    CHECK(cli::parse_complex("3i") == Complex(0.0, 3.0));
    CHECK(cli::parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(cli::parse_complex("1+i") == Complex(1.0, 1.0));
    CHECK(cli::parse_complex("2.5+0.5i") == Complex(2.5, 0.5));
    CHECK(cli::parse_complex("1e-3-2e+2i") == Complex(1e-3, -200.0));
    CHECK(cli::parse_complex("-1.5e2") == Complex(-150.0, 0.0));
    CHECK_THROWS_AS(cli::parse_complex("abc"), ParseError);
    CHECK_THROWS_AS(cli::parse_complex("1+2"), ParseError);
    CHECK_THROWS_AS(cli::parse_complex(""), ParseError);
    CHECK_THROWS_AS(cli::parse_complex("1++2i"), ParseError);
}

TEST_CASE("ranges") {
    CHECK(cli::parse_range("2:5:4") == std::vector<double>{2.0, 3.0, 4.0, 5.0});
    CHECK(cli::parse_range("1:1:1") == std::vector<double>{1.0});
    CHECK(cli::parse_range("-1:1:3") == std::vector<double>{-1.0, 0.0, 1.0});
    CHECK_THROWS_AS(cli::parse_range("1:2"), ParseError);
    CHECK_THROWS_AS(cli::parse_range("1:2:0"), ParseError);
    CHECK_THROWS_AS(cli::parse_range("1:2:x"), ParseError);
    CHECK_THROWS_AS(cli::parse_range("a:2:3"), ParseError);
}

TEST_CASE("eval") {
    const auto r = run({"eval", "--s", "0", "--lambda", "1", "--x", "1"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(value_of(j) - std::exp(1.0)) < 1e-15);
    CHECK(j.contains("abs_err"));
    CHECK(j.contains("method"));
    CHECK(j.contains("work"));

    const auto a = json::parse(run({"eval", "--s", "2", "--lambda", "1", "--x", "-1", "--method", "series"}).out);
    const auto b = json::parse(run({"eval", "--s", "2", "--lambda", "1", "--x", "-1", "--method", "hankel"}).out);
    CHECK(a["method"] == "series");
    CHECK(b["method"] == "hankel");
    CHECK(std::abs(value_of(a) - value_of(b)) < 1e-7);

    const auto n = json::parse(run({"eval", "--s", "-2", "--lambda", "1.5", "--x", "2", "--method", "negint"}).out);
    const double q = exact::q_poly(2).evaluate(2.0, 1.5).real();
    CHECK(std::abs(value_of(n) - std::exp(2.0) * q) < 1e-12);

    const auto c = json::parse(run({"eval", "--s", "2.5+0.5i", "--lambda", "0.5+0.5i", "--x", "1-i"}).out);
    CHECK(std::abs(value_of(c) - eval_series({2.5, 0.5}, {0.5, 0.5}, {1.0, -1.0}).value) < 1e-14);
    const auto rec = json::parse(run({"eval", "--s", "2", "--x", "0.5", "--method", "recursion"}).out);
    CHECK(rec["method"] == "recursion");
}

TEST_CASE("eval errors") {
    CHECK(run({"eval", "--s", "1"}).code == 2);
    CHECK(run({"eval", "--s", "x", "--x", "1"}).code == 2);
    CHECK(run({"eval", "--s", "1", "--x", "1", "--method", "bogus"}).code == 2);
    CHECK(run({"eval", "--s", "0.5", "--x", "1", "--method", "negint"}).code == 2);
    CHECK(run({"eval", "--s", "1", "--lambda", "-1", "--x", "1"}).code == 3);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    const auto e = run({"eval", "--s", "1", "--lambda", "-1", "--x", "1"});
    CHECK(!e.err.empty());
    CHECK(e.out.empty());
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("zeta, eta and lerch") {
    const auto z = json::parse(run({"zeta", "--s", "2"}).out);
    CHECK(std::abs(value_of(z) - pi * pi / 6.0) < 1e-10);
    const auto zl = json::parse(run({"zeta", "--s", "2", "--route", "laplace"}).out);
    CHECK(std::abs(value_of(zl) - pi * pi / 6.0) < 1e-8);
    const auto h = json::parse(run({"zeta", "--s", "2", "--lambda", "2"}).out);
    CHECK(std::abs(value_of(h) - (pi * pi / 6.0 - 1.0)) < 1e-9);
    CHECK(run({"zeta", "--s", "1"}).code == 3);
    const auto eta = json::parse(run({"eta", "--s", "-1"}).out);
    CHECK(std::abs(value_of(eta) - 0.25) < 1e-10);
    const auto eh = json::parse(run({"eta", "--s", "0.5", "--method", "hankel"}).out);
    const auto es = json::parse(run({"eta", "--s", "0.5", "--method", "series"}).out);
    CHECK(std::abs(value_of(eh) - value_of(es)) < 1e-7);
    const auto l = json::parse(run({"lerch", "--x", "0.5", "--s", "2"}).out);
    const auto ls = json::parse(run({"lerch", "--x", "0.5", "--s", "2", "--method", "series"}).out);
    CHECK(std::abs(value_of(l) - value_of(ls)) < 1e-10);
    CHECK(run({"lerch", "--x", "2", "--s", "2"}).code == 3);
}

TEST_CASE("mellin") {
    const auto v = run({"mellin", "--rational", "1/(2-s)", "--x", "1", "--c", "1", "--verify"});
    REQUIRE(v.code == 0);
    const json j = json::parse(v.out);
    CHECK(j["discrepancy"].get<double>() < 1e-6);
    CHECK(j["expression"]["terms"].size() == 1);
    double want = 0.0;
    double w = 1.0;
    for (int n = 0; n < 40; ++n) {
        want += w / (n + 2.0);
        w *= -1.0 / (n + 1);
    }
    CHECK(std::abs(value_of(j) - want) < 1e-13);

    const auto sq = json::parse(run({"mellin", "--rational", "s^2", "--x", "1", "--c", "1"}).out);
    CHECK(std::abs(value_of(sq)) < 1e-15);

    CHECK(run({"mellin", "--rational", "1/(0.5-s)", "--x", "1", "--c", "1"}).code == 4);
    const auto bad = run({"mellin", "--rational", "1/(2-s", "--x", "1", "--c", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("byte 6") != std::string::npos);
    CHECK(run({"mellin", "--rational", "1/(2-s)", "--x", "-1", "--c", "1"}).code == 2);

    const auto moved = json::parse(run({"mellin", "--rational", "1/(1-s)", "--x", "1", "--c", "2", "--c-new", "0.5",
                                        "--verify"})
                                       .out);
    CHECK(moved["expression"].contains("residues"));
    CHECK(moved["discrepancy"].get<double>() < 1e-6);
}

TEST_CASE("series") {
    const auto d = json::parse(run({"series", "--s", "-3", "--x", "1"}).out);
    CHECK(std::abs(value_of(d) - 27.0 * std::exp(1.0) / 4.0) < 1e-12);
    const auto c = json::parse(run({"series", "--s", "-3", "--x", "1", "--method", "closed"}).out);
    CHECK(c["method"] == "closed_form");
    CHECK(std::abs(value_of(c) - value_of(d)) < 1e-12);
    CHECK(run({"series", "--s", "2", "--w", "-1", "--x", "1", "--method", "closed"}).code == 2);
    const auto b = json::parse(run({"series", "--s", "2", "--borel", "10,20,40"}).out);
    REQUIRE(b["borel"].size() == 3);
    CHECK(b["borel"][2]["error"].get<double>() < 0.05);
    CHECK(run({"series", "--s", "2"}).code == 2);
}

TEST_CASE("check") {
    const auto r = run({"check", "--suite", "exact"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["passed"] == true);
    for (const auto& c : j["checks"]) {
        CHECK(c["passed"] == true);
    }
    const auto routes = json::parse(run({"check", "--suite", "routes"}).out);
    CHECK(routes["checks"].size() > 100);
    CHECK(run({"check", "--suite", "bogus"}).code == 2);
}

TEST_CASE("check all") {
    const auto r = run({"check", "--suite", "all"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["failures"] == 0);
}

TEST_CASE("table") {
    const auto z = run({"table", "--function", "zeta", "--s-range", "2:5:4"});
    REQUIRE(z.code == 0);
    const auto rows = csv(z.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"s", "value_re", "value_im", "abs_err"});
    CHECK(std::abs(std::stod(rows[1][1]) - pi * pi / 6.0) < 1e-10);

    const auto p = run({"table", "--function", "polyexp", "--s-range", "-2:2:5", "--x-range", "-1:1:3",
                        "--lambda-range", "1:1:1"});
    REQUIRE(p.code == 0);
    CHECK(csv(p.out).size() == 16);

    const auto h = run({"table", "--function", "h", "--s-range", "1:1:1", "--x-range", "0.5:2:4"});
    REQUIRE(h.code == 0);
    const auto hr = csv(h.out);
    REQUIRE(hr.size() == 5);
    CHECK(hr[0].back() == "abs_err");
    const double x = std::stod(hr[2][3]);
    CHECK(x == 1.0);
    CHECK(std::stod(hr[2][4]) == h_direct({1.0, 1.0, 1.0, x}).value.real());

    CHECK(run({"table", "--function", "zeta", "--s-range", "2:5"}).code == 2);
    CHECK(run({"table", "--function", "zeta", "--s-range", "2:5:0"}).code == 2);
    CHECK(run({"table", "--function", "nope", "--s-range", "2:5:2"}).code == 2);
    CHECK(run({"table", "--function", "polyexp", "--s-range", "2:5:2"}).code == 2);
    const auto pole = run({"table", "--function", "zeta", "--s-range", "0:2:3"});
    CHECK(pole.code == 3);
    CHECK(csv(pole.out).size() == 4);
}

TEST_CASE("determinism and the term cap") {
    const std::vector<std::string> args = {"table", "--function", "polyexp", "--s-range", "-1:3:9", "--x-range",
                                           "-2:3:11"};
    CHECK(run(args).out == run(args).out);
    setenv("POLYEXP_MAX_TERMS", "3", 1);
    CHECK(run({"eval", "--s", "1", "--x", "2", "--method", "series"}).code == 3);
    setenv("POLYEXP_MAX_TERMS", "zero", 1);
    CHECK(run({"eval", "--s", "1", "--x", "2"}).code == 2);
    unsetenv("POLYEXP_MAX_TERMS");
    set_series_term_cap(10000);
    CHECK(run({"eval", "--s", "1", "--x", "2", "--method", "series"}).code == 0);
}

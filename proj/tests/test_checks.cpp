#include "polyexp/checks.hpp"
#include "polyexp/types.hpp"

#include <doctest.h>

#include <chrono>
#include <json.hpp>

using namespace polyexp;

namespace {

void require_suite(const char* name, double seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto records = checks::run_suite(name);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(!records.empty());
    for (const auto& r : records) {
        INFO(r.name << " discrepancy " << r.discrepancy << " tolerance " << r.tolerance);
        CHECK(r.passed);
        CHECK(r.suite == name);
    }
    CHECK(elapsed < seconds);
}

}  // namespace

TEST_CASE("exact suite") { require_suite("exact", 10.0); }
TEST_CASE("routes suite") { require_suite("routes", 30.0); }
TEST_CASE("transforms suite") { require_suite("transforms", 20.0); }
TEST_CASE("mellin suite") { require_suite("mellin", 60.0); }
TEST_CASE("series suite") { require_suite("series", 60.0); }

TEST_CASE("suite names and report") {
    CHECK(checks::suite_names().size() == 5);
    CHECK_THROWS_AS(checks::run_suite("nope"), Error);
    const auto records = checks::run_suite("exact");
    const auto j = nlohmann::json::parse(checks::to_json("exact", records));
    CHECK(j["suite"] == "exact");
    CHECK(j["passed"] == true);
    CHECK(j["failures"] == 0);
    CHECK(j["checks"].size() == records.size());
    CHECK(j["checks"][0].contains("discrepancy"));
}

TEST_CASE("failed records are reported") {
    std::vector<checks::CheckRecord> rs = {{"x", "a", true, 0.0, 1.0}, {"x", "b", false, 2.0, 1.0}};
    CHECK_FALSE(checks::all_passed(rs));
    const auto j = nlohmann::json::parse(checks::to_json("x", rs));
    CHECK(j["passed"] == false);
    CHECK(j["failures"] == 1);
}

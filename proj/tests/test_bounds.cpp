#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>

#include "calibra/bounds.hpp"
#include "calibra/suite.hpp"

using namespace calibra;

TEST_CASE("minvol bound closed form") {
    CHECK(minvol_bound(1, 1.0) == 1.0);
    CHECK(minvol_bound(2, 1.0) == 4.0 / 81.0);
    CHECK(minvol_bound(3, 81.0) == doctest::Approx(2187.0 / 15625.0).epsilon(1e-15));
    CHECK_THROWS_AS(minvol_bound(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(minvol_bound(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(minvol_bound(2, -1.0), std::invalid_argument);
}

TEST_CASE("minvol bound decreases in n") {
    double prev = minvol_bound(1, 1.0);
    for (int n = 2; n <= 10; ++n) {
        const double cur = minvol_bound(n, 1.0);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("degree bound closed form") {
    CHECK(degree_bound(1, 1.0, 1.0, 1.0) == 1);
    CHECK(degree_bound(2, std::sqrt(2.0), 1.0, 1.0) == 1);
    CHECK(degree_bound(2, 1.0, 1.0, 1.0) == 0);
    CHECK(degree_bound(3, std::sqrt(3.0), 2.0, 2.0) == 1);  // equality case survives roundoff
    CHECK(degree_bound(1, 2.0, 1.0, 1.0) == 4);
}

TEST_CASE("degree bound monotonicity") {
    CHECK(degree_bound(2, 2.0, 1.0, 1.0) >= degree_bound(2, 1.5, 1.0, 1.0));
    CHECK(degree_bound(2, 1.5, 2.0, 1.0) >= degree_bound(2, 1.5, 1.0, 1.0));
    CHECK(degree_bound(2, 1.5, 1.0, 2.0) <= degree_bound(2, 1.5, 1.0, 1.0));
}

TEST_CASE("degree bound via query validates missing fields") {
    BoundQuery q;
    q.n = 2;
    q.h_g = 1.5;
    CHECK_THROWS_AS(degree_bound(q), std::invalid_argument);
    q.vol_y = 1.0;
    q.vol_m = 1.0;
    CHECK(degree_bound(q) == degree_bound(2, 1.5, 1.0, 1.0));
}

TEST_CASE("curvature entropy bound is 2n - 1") {
    CHECK(curvature_entropy_bound(1) == 1.0);
    CHECK(curvature_entropy_bound(2) == 3.0);
    CHECK(curvature_entropy_bound(3) == 5.0);
    CHECK_THROWS_AS(curvature_entropy_bound(0), std::invalid_argument);
}

TEST_CASE("run_suite validates its arguments") {
    CHECK_THROWS_AS(run_suite("nope", 1, 0, "quick"), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("cocycle", 3, 0, "quick"), std::invalid_argument);  // quick caps n at 2
    CHECK_THROWS_AS(run_suite("cocycle", 1, 0, "huge"), std::invalid_argument);
}

TEST_CASE("run_suite cocycle passes and is deterministic") {
    const auto a = run_suite("cocycle", 1, 7, "quick");
    CHECK(a.overall());
    CHECK(a.checks.size() >= 5);
    const auto b = run_suite("cocycle", 1, 7, "quick");
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].value == b.checks[i].value);
        CHECK(a.checks[i].pass == b.checks[i].pass);
    }
}

TEST_CASE("verification report JSON is well-formed") {
    const auto report = run_suite("cocycle", 2, 3, "quick");
    const auto j = nlohmann::json::parse(to_json(report));
    CHECK(j["suite"] == "cocycle");
    CHECK(j["n"] == 2);
    CHECK(j["overall"] == "pass");
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].size() == report.checks.size());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("status"));
        CHECK(c.contains("value"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("runtime_ms"));
        CHECK(c.contains("seed"));
    }
}

TEST_CASE("scan report JSON and CSV") {
    const auto scan = scan_fourier(1, 1, PhaseSet::all);
    const auto j = nlohmann::json::parse(to_json(scan));
    CHECK(j["consistent"] == true);
    CHECK(j["entries"].size() == 4);
    CHECK(j["entries"][0].contains("matrix"));
    CHECK(j["entries"][0].contains("phases"));
    CHECK(j["entries"][0].contains("value"));
    CHECK(j["entries"][0].contains("pattern"));
    CHECK(j["entries"][0].contains("predicted"));
    CHECK(j["entries"][0].contains("abs_error"));

    const std::string csv = to_csv(scan);
    CHECK(csv.rfind("matrix,phases,value,predicted,error\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 entries
}

TEST_CASE("search report JSON") {
    const auto rep = search(1, 1, 2, 11);
    const auto j = nlohmann::json::parse(to_json(rep));
    CHECK(j["best_value"].is_number());
    CHECK(j["theoretical"].is_number());
    CHECK(j["gap"].is_number());
    CHECK(j["best_frame"].is_array());
    CHECK(j["best_frame"].size() == 2);
}

#include <doctest.h>

#include "mtheta/verify.hpp"

using namespace mtheta;

TEST_CASE("reports are deterministic for fixed parameters and seed") {
    auto r1 = verify::run_suite("cocycle", 7, 42, 20);
    auto r2 = verify::run_suite("cocycle", 7, 42, 20);
    CHECK(r1.to_json().dump() == r2.to_json().dump());
    CHECK(r1.to_text() == r2.to_text());
}

TEST_CASE("report structure and exit codes") {
    auto rep = verify::run_suite("orbits", 7, 0, 5);
    CHECK(rep.all_pass());
    CHECK(rep.exit_code() == 0);
    auto j = rep.to_json();
    CHECK(j["command"] == "verify");
    CHECK(j.contains("params"));
    CHECK(j.contains("conventions"));
    CHECK(j.contains("seed"));
    // checks sorted by name
    std::string prev;
    for (const auto& c : j["checks"]) {
        std::string name = c["name"].get<std::string>();
        CHECK(prev <= name);
        prev = name;
    }

    report::Report failing;
    failing.command = "verify";
    failing.checks.push_back(report::CheckRecord::fail("x", {{"input", 1}}));
    CHECK(failing.exit_code() == 1);
}

TEST_CASE("unknown suite is a usage error") {
    CHECK_THROWS_AS(verify::run_suite("nonsense", 7, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify::run_suite("orbits", 6, 0, 5), std::invalid_argument);
}

TEST_CASE("cocycle suite skips at non-tame primes") {
    auto rep = verify::run_suite("cocycle", 5, 0, 5);  // 3 does not divide 5 - 1
    CHECK(rep.all_pass());
    CHECK(rep.exit_code() == 0);
    bool skipped = false;
    for (const auto& c : rep.checks)
        if (c.status == "skip") skipped = true;
    CHECK(skipped);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qra/registry.hpp"

using namespace qra;

TEST_CASE("full registry passes at the default ranges with failing mutants") {
    RegistryOptions opt;
    opt.include_mutants = true;
    std::vector<CheckReport> reports = run_registry(opt);
    CHECK(reports.size() == registry_check_names(true).size());
    for (const CheckReport& r : reports) {
        INFO(r.name << ": " << r.detail);
        if (r.name.rfind("mutant-", 0) == 0)
            CHECK(r.status == "fail");
        else
            CHECK(r.status == "pass");
    }
    CHECK(registry_all_pass(reports));
}

TEST_CASE("selection filter runs exactly the named checks in order") {
    RegistryOptions opt;
    opt.selection = {"young-stats-spot", "qbinom-alternating-sum"};
    std::vector<CheckReport> reports = run_registry(opt);
    REQUIRE(reports.size() == 2);
    // registry order, not selection order
    CHECK(reports[0].name == "qbinom-alternating-sum");
    CHECK(reports[1].name == "young-stats-spot");
    CHECK(registry_all_pass(reports));

    // mutants may be selected explicitly even without the flag
    opt.selection = {"mutant-young-offset"};
    reports = run_registry(opt);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].status == "fail");
    CHECK(registry_all_pass(reports));
}

TEST_CASE("check name listing separates mutants") {
    std::vector<std::string> base = registry_check_names(false);
    std::vector<std::string> all = registry_check_names(true);
    CHECK(base.size() + 3 == all.size());
    for (const std::string& n : base) CHECK(n.rfind("mutant-", 0) != 0);
}

TEST_CASE("report serialization carries check, grid, and status") {
    CheckReport r;
    r.name = "example";
    r.grid = {{"n", 3}, {"r", 2}};
    r.status = "pass";
    r.seconds = 0.25;
    CheckReport bad = r;
    bad.name = "broken";
    bad.status = "fail";
    bad.detail = "first counterexample";

    nlohmann::json arr = nlohmann::json::parse(registry_report_json({r, bad}, false, false));
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["check"] == "example");
    CHECK(arr[0]["grid"]["n"] == 3);
    CHECK(arr[0]["grid"]["r"] == 2);
    CHECK(arr[0]["status"] == "pass");
    CHECK_FALSE(arr[0].contains("seconds"));
    CHECK_FALSE(arr[0].contains("detail"));
    CHECK(arr[1]["detail"] == "first counterexample");

    nlohmann::json timed = nlohmann::json::parse(registry_report_json({r}, true, true));
    CHECK(timed[0]["seconds"] == 0.25);
}

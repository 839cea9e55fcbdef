#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "report.hpp"
#include "scenario.hpp"

using namespace entropia;
using nlohmann::json;

TEST_CASE("scenario parsing reports the offending path")
{
    auto expect_parse_error = [](const json& spec, const std::string& needle) {
        try {
            parse_scenario(spec);
            FAIL("expected a parse error mentioning " << needle);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_parse_error(json::parse(R"({"endo": {}})"), "/");
    expect_parse_error(json::parse(R"({"model": {"kind": "banana"}})"), "/model/kind");
    expect_parse_error(json::parse(R"({"model": {"kind": "padic"}})"), "/model");
    expect_parse_error(
        json::parse(R"({"model": {"kind": "shift", "coefficient": {"cyclic": "x"}}})"),
        "/model/coefficient/cyclic");
    expect_parse_error(
        json::parse(R"({"model": {"kind": "finite", "group": {"name": "XYZ"}}})"),
        "/model/group/name");
}

TEST_CASE("integers can arrive as decimal strings")
{
    json spec = {{"model", {{"kind", "padic"}, {"p", "31"}}},
                 {"endo", {{"valuation", "-2"}}}};
    Scenario sc = parse_scenario(spec);
    CHECK(sc.model->describe() == "Q_31");
    json report = run_request(json{{"command", "entropy"}, {"scenario", spec}});
    CHECK(report["h_alg"]["decimal"] == "961"); // 31^2
}

TEST_CASE("entropy reports cross-check both routes and round-trip exactly")
{
    json request = {{"command", "entropy"},
                    {"scenario",
                     {{"model", {{"kind", "shift"}, {"coefficient", {{"cyclic", 6}}}}},
                      {"endo", {{"shift", -1}}}}}};
    json report = run_request(request);
    CHECK(report["exit_code"] == 0);
    CHECK(report["agreement"] == true);
    CHECK(report["certified"] == true);

    EntropyValue h = value_from_json(report["h_alg"]);
    CHECK(h == EntropyValue::log_of(Factored::from_integer(6)));

    // every exact value in the trajectory tables parses back unchanged
    for (const auto& member : report["paths"]["limit"]["members"]) {
        Factored t_prev;
        for (std::size_t i = 0; i < member["table"]["t"].size(); ++i) {
            Factored t = factored_from_json(member["table"]["t"][i]);
            if (i > 0) {
                Factored ratio = factored_from_json(member["table"]["beta"][i - 1]);
                REQUIRE(t == t_prev.times(ratio));
            }
            t_prev = t;
        }
    }
}

TEST_CASE("the limit path degrades gracefully when images are unrepresentable")
{
    // a coefficient map whose image is a non-normal transposition subgroup:
    // trajectory images leave the class, the limit-free route still answers
    json request = {{"command", "entropy"},
                    {"scenario",
                     {{"model", {{"kind", "shift"}, {"coefficient", {{"name", "S3"}}}}},
                      {"endo", {{"shift", -1}, {"theta", {{"map", {0, 1, 1, 0, 0, 1}}}}}}}}};
    json report = run_request(request);
    CHECK(report["paths"]["limit"]["available"] == false);
    // the hull gains an alternating-kernel tail; the remaining growth is the
    // index of the sign image, 2 per step
    CHECK(value_from_json(report["h_alg"]) ==
          EntropyValue::log_of(Factored::from_integer(2)));
}

TEST_CASE("table command prints the raw trajectory data")
{
    json request = {{"command", "table"},
                    {"n", 5},
                    {"scenario",
                     {{"model", {{"kind", "padic"}, {"p", 3}}},
                      {"endo", {{"valuation", -1}}},
                      {"U", {{"level", 0}}}}}};
    json report = run_request(request);
    CHECK(report["exit_code"] == 0);
    CHECK(report["table"]["t"].size() == 5);
    CHECK(factored_from_json(report["table"]["t"][4]) == Factored::from_integer(81));
}

TEST_CASE("check command exit codes distinguish violation from hypothesis failure")
{
    json holds = run_request(
        {{"command", "check"},
         {"which", "bridge"},
         {"scenario",
          {{"model", {{"kind", "shift"}, {"coefficient", {{"cyclic", 2}}}}},
           {"endo", {{"shift", -1}}}}}});
    CHECK(holds["exit_code"] == 0);
    CHECK(holds["holds"] == true);

    json fallback = run_request(
        {{"command", "check"},
         {"which", "addition-theorem"},
         {"scenario",
          {{"model", {{"kind", "shift"}, {"coefficient", {{"cyclic", 4}}}}},
           {"endo", {{"shift", 0}, {"theta", {{"mult", 2}}}}},
           {"H", {{"constant", {2}}}}}}});
    CHECK(fallback["exit_code"] == 2);
    CHECK(fallback["hypothesis_ok"] == false);
    CHECK(fallback["holds"] == true);
}

TEST_CASE("properties-all bundles the applicable checks")
{
    json report = run_request(
        {{"command", "check"},
         {"which", "properties-all"},
         {"scenario",
          {{"model", {{"kind", "shift"}, {"coefficient", {{"cyclic", 2}}}}},
           {"endo", {{"shift", -1}}},
           {"H", {{"constant", {0}}}}}}});
    CHECK(report["exit_code"] == 0);
    CHECK(report["checks"].size() >= 4);
}

TEST_CASE("uncertified runs fail unless the heuristic flag allows them")
{
    json scenario = {{"model", {{"kind", "shift"}, {"coefficient", {{"cyclic", 3}}}}},
                     {"endo", {{"shift", -1}}},
                     {"options", {{"use_model_bounds", false}}}};
    json strict = run_request({{"command", "entropy"}, {"scenario", scenario}});
    CHECK(strict["certified"] == false);
    CHECK(strict["exit_code"] == 1);

    scenario["options"]["allow_heuristic"] = true;
    json relaxed = run_request({{"command", "entropy"}, {"scenario", scenario}});
    CHECK(relaxed["certified"] == false);
    CHECK(relaxed["exit_code"] == 0);
}

TEST_CASE("budget exhaustion surfaces as the dedicated error")
{
    json scenario = {{"model", {{"kind", "shift"}, {"coefficient", {{"cyclic", 3}}}}},
                     {"endo", {{"shift", -1}}},
                     {"options",
                      {{"use_model_bounds", false}, {"window", 500}, {"budget", 6}}}};
    try {
        run_request({{"command", "entropy"}, {"scenario", scenario}});
        FAIL("expected a budget error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IterationBudgetExceeded);
        CHECK(exit_code_for(e.code()) == 4);
    }
    CHECK(exit_code_for(ErrorCode::HypothesisFailed) == 2);
    CHECK(exit_code_for(ErrorCode::ParseError) == 3);
}

TEST_CASE("sweeps are deterministic per seed")
{
    json request = {{"command", "sweep"}, {"order_max", 8}, {"count", 30}, {"seed", 5}};
    json a = run_request(request);
    json b = run_request(request);
    CHECK(a == b);
    CHECK(a["ok"] == true);
    CHECK(a["endos_checked"].get<int>() >= 30);
    CHECK(a["failures"].empty());
}

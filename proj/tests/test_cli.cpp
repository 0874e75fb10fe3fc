#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "dualscope/cli.hpp"
#include "dualscope/serialize.hpp"

using namespace dualscope;

namespace {
json run_json(const std::vector<std::string>& args, int expect_code = 0) {
    DispatchResult r = dispatch(args);
    REQUIRE(r.exit_code == expect_code);
    return json::parse(r.output);
}
}  // namespace

TEST_CASE("check subcommand") {
    json j = run_json({"check", "--n", "4", "--t", "0,1", "--s", "0,1"});
    CHECK(j["is_dual"] == true);
    json neg = run_json({"check", "--n", "4", "--t", "0,1", "--s", "0,2"});
    CHECK(neg["is_dual"] == false);
    CHECK(neg["failure"] == "DivisorEquation");
    CHECK(neg["failing_divisor"] == 1);
    json one = run_json({"check", "--n", "1", "--t", "0", "--s", "0"});
    CHECK(one["is_dual"] == true);
}

TEST_CASE("eliminate subcommand and verify-trace round-trip") {
    json v = run_json({"eliminate", "--n", "144", "--mode", "paper"});
    CHECK(v["outcome"] == "Undecided");
    CHECK(v["residual"].get<std::string>().rfind("p^{2k}q^2", 0) == 0);

    json v396 = run_json({"eliminate", "--n", "396"});
    CHECK(v396["outcome"] == "Eliminated");
    CHECK(v396["criterion"] == "SelfConjugateExactDivisor");
    for (auto& p : v396["premises"]) CHECK(p["holds"] == true);

    std::string path = "cli_trace_tmp.json";
    {
        std::ofstream f(path);
        f << v396.dump();
    }
    json chk = run_json({"verify-trace", "--in", path});
    CHECK(chk["valid"] == true);
    CHECK(chk["premises_checked"].get<i64>() > 0);

    // tampered trace must be rejected
    json bad = v396;
    bad["premises"][0]["holds"] = false;
    bad["trace"][3]["premises"][0]["holds"] = false;
    {
        std::ofstream f(path);
        f << bad.dump();
    }
    DispatchResult r = dispatch({"verify-trace", "--in", path});
    CHECK(r.exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("fdm subcommand") {
    json j = run_json({"fdm", "--m", "216", "--n", "27"});
    CHECK(j["F"] == 24);
    CHECK(j["fbound"] == "18");
    CHECK(j["excludes"] == true);
    CHECK(j["b"]["2"] == 3);
    CHECK(j["b"]["3"] == 1);
    // non-integral bound serializes as an exact fraction
    json frac = run_json({"fdm", "--m", "9", "--n", "3"});
    CHECK(frac["fbound"] == "9/8");
}

TEST_CASE("rsum, split, selfconj subcommands") {
    json r = run_json({"rsum", "--n", "12", "--d", "2"});
    CHECK(r["value"] == 2);
    json row = run_json({"rsum", "--n", "4"});
    CHECK(row["values"] == json::array({2, 0, -2, 0}));

    json s = run_json({"split", "--n", "12", "--p", "2"});
    CHECK(s["e"] == 2);
    CHECK(s["f"] == 2);
    CHECK(s["r"] == 1);

    json sc = run_json({"selfconj", "--n", "396", "--p", "11"});
    CHECK(sc["self_conjugate"] == true);
    json sc2 = run_json({"selfconj", "--n", "275", "--p", "5"});
    CHECK(sc2["self_conjugate"] == false);
}

TEST_CASE("search subcommand") {
    json j = run_json({"search", "--n", "4"});
    CHECK(j["count"] == 1);
    CHECK(j["orbits"][0]["t"] == json::array({0, 1}));
    json empty = run_json({"search", "--n", "9"});
    CHECK(empty["count"] == 0);
}

TEST_CASE("census subcommand with tsv output") {
    DispatchResult r = dispatch({"census", "--pmax", "5", "--qmax", "5", "--format", "tsv"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "p\tq\tk\tl\tN\n2\t3\t4\t2\t144\n");
}

TEST_CASE("exit codes") {
    CHECK(dispatch({"check", "--n", "4", "--t", "0,1"}).exit_code == 2);       // missing --s
    CHECK(dispatch({"check", "--n", "4", "--t", "0,x", "--s", "0,1"}).exit_code == 2);
    CHECK(dispatch({"check", "--n", "0", "--t", "0", "--s", "0"}).exit_code == 2);
    CHECK(dispatch({"check", "--n", "6", "--t", "0,7", "--s", "0,1"}).exit_code == 2);
    CHECK(dispatch({"eliminate", "--n", "12", "--mode", "nonsense"}).exit_code == 2);
    CHECK(dispatch({"search", "--n", "24", "--max-nodes", "5"}).exit_code == 3);  // budget
    CHECK(dispatch({"nonsense"}).exit_code == 2);
}

TEST_CASE("byte determinism") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"check", "--n", "4", "--t", "0,1", "--s", "0,1"},
             {"eliminate", "--n", "144", "--mode", "paper"},
             {"search", "--n", "12"},
             {"fdm", "--m", "216", "--n", "27"},
             {"census", "--pmax", "50", "--qmax", "50"},
         }) {
        DispatchResult a = dispatch(args);
        DispatchResult b = dispatch(args);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
    // census output identical regardless of worker count
    DispatchResult j1 = dispatch({"census", "--pmax", "100", "--qmax", "100", "--jobs", "1"});
    DispatchResult j8 = dispatch({"census", "--pmax", "100", "--qmax", "100", "--jobs", "8"});
    CHECK(j1.output == j8.output);
}

TEST_CASE("--meta adds metadata outside the stable payload") {
    json plain = json::parse(dispatch({"fdm", "--m", "216", "--n", "27"}).output);
    json with = json::parse(dispatch({"--meta", "fdm", "--m", "216", "--n", "27"}).output);
    CHECK_FALSE(plain.contains("meta"));
    CHECK(with.contains("meta"));
    with.erase("meta");
    CHECK(plain == with);
}

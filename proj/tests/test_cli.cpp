#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hankel/cli.hpp"
#include "hankel/report.hpp"

#include <sstream>

using namespace hankel;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json payload_of(const std::string& text) {
    return json::parse(text).at("payload");
}

}  // namespace

TEST_CASE("parse_args fills defaults") {
    auto cmd = cli::parse_args({"reproduce", "--class", "r"});
    CHECK(cmd.subcommand == "reproduce");
    CHECK(cmd.cls == "r");
    CHECK(cmd.tol == 1e-6);
    CHECK(cmd.seed == 42);
    CHECK(cmd.samples == 100000);
    CHECK(cmd.budget == 1000000);
    CHECK(cmd.format == "text");
}

TEST_CASE("parse_args reads maximize options") {
    auto cmd = cli::parse_args({"maximize", "--poly", "g1", "--region", "unit-square", "--tol", "1e-8"});
    CHECK(cmd.subcommand == "maximize");
    CHECK(cmd.poly == "g1");
    CHECK(cmd.region == "unit-square");
    CHECK(cmd.tol == 1e-8);
}

TEST_CASE("invalid class enum exits 3") {
    auto r = run_cli({"reproduce", "--class", "q"});
    CHECK(r.code == cli::kUsageError);
    CHECK(!r.err.empty());
}

TEST_CASE("unknown subcommand and flags exit 3") {
    CHECK(run_cli({"frobnicate"}).code == cli::kUsageError);
    CHECK(run_cli({"reproduce", "--class", "r", "--bogus"}).code == cli::kUsageError);
    CHECK(run_cli({}).code == cli::kUsageError);
}

TEST_CASE("reproduce r emits the final bound 207/540") {
    auto r = run_cli({"reproduce", "--class", "r", "--format", "json"});
    CHECK(r.code == cli::kOk);
    auto payload = payload_of(r.out);
    CHECK(payload.at("final_display") == "207/540");
    CHECK(payload.at("final_is_case1") == true);
    CHECK(payload.at("prior_bound").get<double>() == doctest::Approx(0.644879).epsilon(1e-5));
}

TEST_CASE("reproduce r1 emits 3537/129600 and three discrepancies") {
    auto r = run_cli({"reproduce", "--class", "r1", "--format", "json"});
    CHECK(r.code == cli::kOk);
    auto payload = payload_of(r.out);
    CHECK(payload.at("final_display") == "3537/129600");
    int discrepancies = 0;
    for (const auto& item : payload.at("audit"))
        if (item.at("kind") == "discrepancy") ++discrepancies;
    CHECK(discrepancies == 3);
}

TEST_CASE("maximize h2 over triangle-E certifies 12233") {
    auto r = run_cli({"maximize", "--poly", "h2", "--region", "triangle-E", "--format", "json"});
    CHECK(r.code == cli::kOk);
    auto payload = payload_of(r.out);
    CHECK(payload.at("upper").get<double>() == doctest::Approx(12233.0).epsilon(1e-9));
    CHECK(payload.at("lower_exact") == "12233");
    CHECK(payload.at("inflation_ulps") == 4);
}

TEST_CASE("maximize over an edge and the edges table") {
    auto r = run_cli({"maximize", "--poly", "g1", "--region", "edge-y0", "--format", "json"});
    CHECK(r.code == cli::kOk);
    CHECK(payload_of(r.out).at("upper").get<double>() == doctest::Approx(25.0).epsilon(1e-9));

    auto table = run_cli({"maximize", "--poly", "g1", "--region", "edges", "--format", "csv"});
    CHECK(table.code == cli::kOk);
    CHECK(table.out.find("polynomial,region,upper") == 0);
    // header + four edges
    CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 5);
}

TEST_CASE("budget exhaustion exits 2 with sound output") {
    auto r = run_cli({"maximize", "--poly", "g1", "--region", "unit-square", "--tol", "1e-12",
                      "--budget", "8", "--format", "json"});
    CHECK(r.code == cli::kBudgetExhausted);
    auto payload = payload_of(r.out);
    CHECK(payload.at("complete") == false);
    CHECK(payload.at("upper").get<double>() >= 65.787753);
}

TEST_CASE("explore respects bounds and exits 0") {
    auto r = run_cli({"explore", "--class", "r1", "--samples", "1000", "--seed", "7",
                      "--format", "json"});
    CHECK(r.code == cli::kOk);
    auto payload = payload_of(r.out);
    CHECK(payload.at("violations") == 0);
    CHECK(payload.at("best_value").get<double>() >= 1.0 / 64.0);
}

TEST_CASE("explore csv sample log") {
    auto r = run_cli({"explore", "--class", "r", "--samples", "50", "--seed", "3", "--format", "csv"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("re_c1,im_c1") == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 55);  // header + 50 + 4 witnesses
}

TEST_CASE("csv rejected outside sample logs and edge tables") {
    CHECK(run_cli({"audit", "--class", "r", "--format", "csv"}).code == cli::kUsageError);
    CHECK(run_cli({"lemmas", "--format", "csv"}).code == cli::kUsageError);
}

TEST_CASE("lemmas subcommand passes on a small run") {
    auto r = run_cli({"lemmas", "--samples", "2000", "--seed", "42", "--format", "json"});
    CHECK(r.code == cli::kOk);
    CHECK(payload_of(r.out).at("pass") == true);
}

TEST_CASE("audit passes for both classes; corrupted registry exits 1") {
    CHECK(run_cli({"audit", "--class", "r"}).code == cli::kOk);
    CHECK(run_cli({"audit", "--class", "r1"}).code == cli::kOk);
    auto r = run_cli({"audit", "--class", "r", "--selftest-corrupt"});
    CHECK(r.code == cli::kVerificationFailed);
}

TEST_CASE("derive prints the coefficient formulas") {
    auto r = run_cli({"derive", "--class", "r1", "--format", "json"});
    CHECK(r.code == cli::kOk);
    auto payload = payload_of(r.out);
    CHECK(payload.at("coefficients").at("a3").get<std::string>().find("2/9") != std::string::npos);
    CHECK(payload.at("h3").at("scale") == "1/1166400");
}

TEST_CASE("json envelope round-trips and is deterministic modulo timestamp") {
    auto a = run_cli({"explore", "--class", "r", "--samples", "200", "--seed", "5", "--format", "json"});
    auto b = run_cli({"explore", "--class", "r", "--samples", "200", "--seed", "5", "--format", "json"});
    auto ja = json::parse(a.out);
    auto jb = json::parse(b.out);
    // round-trip through the envelope parser
    auto env = envelope_from_json(ja);
    CHECK(envelope_to_json(env) == ja);
    CHECK(env.schema_version == kSchemaVersion);
    // byte-identical except the timestamp field
    ja.erase("timestamp");
    jb.erase("timestamp");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("help exits 0") {
    CHECK(run_cli({"--help"}).code == cli::kOk);
}

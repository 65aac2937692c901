#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracgreen/cli.hpp"
#include "fracgreen/green.hpp"

using namespace fracgreen;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    return rows;
}

}  // namespace

TEST_CASE("eval") {
    Run r = run({"eval", "--alpha", "2", "--beta", "1", "--theta", "0", "--x", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.2820948") != std::string::npos);
    r = run({"eval", "--alpha", "1", "--beta", "1", "--theta", "0", "--x", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.1591549") != std::string::npos);
    CHECK(r.out.find("closed-form") != std::string::npos);
}

TEST_CASE("exit codes") {
    Run r = run({"eval", "--alpha", "1.5", "--beta", "1", "--theta", "0.8", "--x", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("|theta| <= min(alpha, 2 - alpha)") != std::string::npos);
    r = run({"eval", "--alpha", "2", "--beta", "2", "--theta", "0", "--x", "1"});
    CHECK(r.code == 4);
    CHECK(r.out.find("delta(x+t) + delta(x-t)") != std::string::npos);
    r = run({"eval", "--alpha", "0.5", "--beta", "0.8", "--theta", "0.25", "--x", "0.01", "--tol", "1e-14"});
    CHECK(r.code == 3);
    r = run({"eval", "--alpha", "1.5", "--beta", "0.8", "--theta", "0", "--x", "1", "--tol", "1e-20"});
    CHECK(r.code == 2);
    r = run({"eval", "--alpha", "1.5"});
    CHECK(r.code == 2);
    r = run({"frobnicate"});
    CHECK(r.code == 2);
}

TEST_CASE("version") {
    const Run r = run({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out == "fracgreen 1.0.0\n");
}

TEST_CASE("csv table") {
    const Run r = run({"table", "--alpha", "2", "--beta", "1", "--theta", "0", "--x-min", "-4", "--x-max", "4", "--n", "81"});
    REQUIRE(r.code == 0);
    const auto rows = data_lines(r.out);
    REQUIRE(rows.size() == 82);
    CHECK(rows[0] == "x,value,abs_err,method");
    CHECK(rows[41].rfind("0,0.2820947917738781", 0) == 0);
    CHECK(r.out.rfind("# fracgreen 1.0.0\n", 0) == 0);

    const Run two = run({"table", "--alpha", "1.5", "--beta", "0.8", "--theta", "0.2", "--x-min", "0", "--x-max", "1", "--n", "2"});
    REQUIRE(two.code == 0);
    CHECK(data_lines(two.out).size() == 3);
}

TEST_CASE("json table round trip") {
    const Run r = run({"table", "--alpha", "1.5", "--beta", "0.8", "--theta", "0.2", "--x-min", "-2", "--x-max", "2",
                       "--n", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["meta"]["version"] == "fracgreen 1.0.0");
    CHECK(j["meta"]["alpha"].get<double>() == 1.5);
    REQUIRE(j["rows"].size() == 5);
    const FractionalTriplet t = validate(1.5, 0.8, 0.2);
    for (const auto& row : j["rows"]) {
        const double x = row[0].get<double>();
        CHECK(row[1].get<double>() == green(t, x, 1.0, 1e-8).value);
        CHECK(row[3].is_string());
    }
}

TEST_CASE("tables are deterministic under threading") {
    const std::vector<std::string> args{"table", "--alpha", "1.2", "--beta", "0.7", "--theta", "0.3",
                                        "--x-min", "-3", "--x-max", "3", "--n", "13"};
    setenv("FRACGREEN_THREADS", "1", 1);
    const Run one = run(args);
    setenv("FRACGREEN_THREADS", "4", 1);
    const Run four = run(args);
    unsetenv("FRACGREEN_THREADS");
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("table errors produce no rows") {
    Run r = run({"table", "--alpha", "2", "--beta", "1", "--theta", "0", "--x-min", "1", "--x-max", "0", "--n", "5"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    r = run({"table", "--alpha", "2", "--beta", "1", "--theta", "0", "--x-min", "0", "--x-max", "1", "--n", "1"});
    CHECK(r.code == 2);
    r = run({"table", "--alpha", "0.5", "--beta", "0.8", "--theta", "0.25", "--x-min", "0.01", "--x-max", "1", "--n", "3",
             "--tol", "1e-14"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    r = run({"table", "--alpha", "2", "--beta", "1", "--theta", "0", "--x-min", "0", "--x-max", "1", "--n", "3", "--format", "xml"});
    CHECK(r.code == 2);
}

TEST_CASE("moments") {
    Run r = run({"moments", "--alpha", "2", "--beta", "1", "--theta", "0", "--delta", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("value=1 ") == std::string::npos);
    CHECK(r.out.find("value=1\n") != std::string::npos);
    r = run({"moments", "--alpha", "1.2", "--beta", "0.7", "--theta", "0.3", "--delta", "0"});
    CHECK(r.out.find("value=0.375\n") != std::string::npos);
    r = run({"moments", "--alpha", "1.5", "--beta", "1", "--theta", "0", "--delta", "1.6"});
    CHECK(r.code == 2);
    r = run({"moments", "--alpha", "1.5", "--beta", "1", "--theta", "0", "--delta", "0.25", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("quadrature=") != std::string::npos);
}

TEST_CASE("verify") {
    Run r = run({"verify", "--suite", "symmetry"});
    CHECK(r.code == 0);
    CHECK(r.out.find("summary suite=symmetry checks=1 failed=0") != std::string::npos);
    CHECK(r.out.find("status=pass") != std::string::npos);
    r = run({"verify", "--suite", "nonsense"});
    CHECK(r.code == 2);
}

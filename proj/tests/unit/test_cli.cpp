#include "cli.hpp"
#include "run_config.hpp"

#include "halfstrip/common.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

using namespace halfstrip::cli;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("config round trip and validation") {
    RunConfig c;
    c.sigma = 0.1 + 0.2;
    c.p = 2.5;
    c.J = 12;
    c.seed = 42;
    c.format = "csv";
    CHECK(parse_config(to_text(c)) == c);
    const std::string path = temp_path("halfstrip_test_config.txt");
    save_config(c, path);
    CHECK(load_config(path) == c);
    std::remove(path.c_str());

    CHECK(parse_config("# comment\nsigma = 2\n\nJ=6 # trailing\n").J == 6);
    CHECK_THROWS_AS(parse_config("colour = red\n"), halfstrip::ParameterError);
    CHECK_THROWS_AS(parse_config("sigma = -1\n"), halfstrip::ParameterError);
    CHECK_THROWS_AS(parse_config("J = 40\n"), halfstrip::ParameterError);
    CHECK_THROWS_AS(load_config(temp_path("halfstrip_missing_config.txt")), halfstrip::ParameterError);
}

TEST_CASE("command-line flags override the config file") {
    const std::string path = temp_path("halfstrip_test_override.txt");
    {
        std::ofstream f(path);
        f << "sigma = 3\nseed = 5\n";
    }
    const Result r = run({"--config", path, "--sigma", "2", "eval", "cauchy", "--fn", "pole(10)", "--at", "0.5i"});
    std::remove(path.c_str());
    REQUIRE(r.code == kOk);
    CHECK(json::parse(r.out)["sigma"] == 2.0);
}

TEST_CASE("Cauchy transform of a plus-side function") {
    const Result r = run({"eval", "cauchy", "--fn", "pole(2)", "--at", "3, 0.5+i"});
    REQUIRE(r.code == kOk);
    const json j = json::parse(r.out);
    const auto& rows = j["cauchy"];
    REQUIRE(rows.size() == 2);
    // C F = 0 in Omega- and F in Omega+.
    CHECK(std::abs(rows[0]["value"]["re"].get<double>()) < 1e-10);
    CHECK(std::abs(rows[0]["value"]["im"].get<double>()) < 1e-10);
    const halfstrip::cplx expect = 1.0 / (halfstrip::cplx(0.5, 1.0) - 2.0);
    CHECK(rows[1]["value"]["re"].get<double>() == doctest::Approx(expect.real()).epsilon(1e-10));
    CHECK(rows[1]["value"]["im"].get<double>() == doctest::Approx(expect.imag()).epsilon(1e-10));
}

TEST_CASE("CSV output is rectangular with LF endings") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"map", "--which", "phi-", "--at", "0.5-i, -2-0.1i", "--format", "csv"},
          std::vector<std::string>{"norm", "--fn", "expw(1)", "--side", "plus", "--J", "5"},
          std::vector<std::string>{"limit", "--fn", "pole(2)+pole(0.5i)", "--zeta0", "0.3", "--radii", "8"}}) {
        const Result r = run(args);
        CAPTURE(args[0]);
        REQUIRE(r.code == kOk);
        CHECK(r.out.find('\r') == std::string::npos);
        CHECK(r.out.back() == '\n');
        const auto rows = csv_rows(r.out);
        REQUIRE(rows.size() >= 2);
        for (const auto& row : rows) CHECK(row.size() == rows.front().size());
    }
}

TEST_CASE("exit codes") {
    CHECK(run({"verify", "--check", "CHK-K1"}).code == kOk);
    CHECK(run({"verify", "--check", "NOPE"}).code == kUsage);
    CHECK(run({"--sigma", "-1", "verify", "--check", "CHK-K1"}).code == kUsage);
    CHECK(run({"frobnicate"}).code == kUsage);
    CHECK(run({"eval", "cauchy", "--fn", "pole(", "--at", "1"}).code == kUsage);
    // On Gamma itself.
    CHECK(run({"eval", "cauchy", "--fn", "pole(2)", "--at", "0.2"}).code == kUsage);
    // A declared decay the integrand does not have surfaces as a numerical failure.
    CHECK(run({"--rel-tol", "1e-300", "--abs-tol", "1e-300", "eval", "cauchy", "--fn", "pole(5)", "--at", "0.5i"}).code ==
          kNumerical);
}

TEST_CASE("verify writes one report for a single check and a summary otherwise") {
    const Result one = run({"verify", "--check", "CHK-M2"});
    REQUIRE(one.code == kOk);
    CHECK(json::parse(one.out)["check_id"] == "CHK-M2");

    const Result tag = run({"verify", "--tag", "blaschke"});
    REQUIRE(tag.code == kOk);
    const json j = json::parse(tag.out);
    CHECK(j["summary"]["pass"] == 2);
    CHECK(j["reports"][0]["check_id"] == "CHK-BL1");
    CHECK(run({"verify", "--tag", "blaschke"}).out == tag.out);
}

TEST_CASE("output file") {
    const std::string path = temp_path("halfstrip_test_out.json");
    const Result r = run({"--output", path, "map", "--which", "psi+", "--at", "0.5i"});
    REQUIRE(r.code == kOk);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    CHECK(json::parse(s.str()).contains("map"));
    std::remove(path.c_str());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "secretary/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = secretary::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exact subcommand emits the rational and its decimal value") {
  const auto result = run({"exact", "--n", "2", "--k", "2", "--m", "1",
                           "--strategy", "inclusive"});
  REQUIRE(result.code == 0);
  const json record = json::parse(result.out);
  CHECK(record["command"] == "exact");
  CHECK(record["mode"] == "exact");
  CHECK(record["result"]["rational"] == "5/6");
  CHECK(record["result"]["value"].get<double>() == doctest::Approx(5.0 / 6.0));
  // round trip: the echoed inputs are the invocation's parameters
  CHECK(record["inputs"]["n"] == 2);
  CHECK(record["inputs"]["k"] == 2);
  CHECK(record["inputs"]["m"] == 1);
  CHECK(record["inputs"]["strategy"] == "inclusive");
}

TEST_CASE("exact subcommand honors the float-mode override") {
  const auto result = run({"exact", "--n", "2", "--k", "2", "--m", "1",
                           "--strategy", "strict", "--mode", "float"});
  REQUIRE(result.code == 0);
  const json record = json::parse(result.out);
  CHECK(record["mode"] == "float");
  CHECK_FALSE(record["result"].contains("rational"));
  CHECK(record["result"]["value"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("brute subcommand matches the formula") {
  const auto result = run({"brute", "--n", "2", "--k", "2", "--m", "2",
                           "--strategy", "strict"});
  REQUIRE(result.code == 0);
  CHECK(json::parse(result.out)["result"]["rational"] == "1/6");
}

TEST_CASE("limit subcommand evaluates the asymptotic probability") {
  const auto result = run({"limit", "--k", "2", "--c", "0.386",
                           "--strategy", "inclusive"});
  REQUIRE(result.code == 0);
  const json record = json::parse(result.out);
  CHECK(std::fabs(record["result"]["value"].get<double>() - 0.701) <= 0.001);
  CHECK(record["inputs"]["c"].get<double>() == 0.386);
}

TEST_CASE("curve subcommand covers both endpoints") {
  const auto result = run({"curve", "--k", "2", "--strategy", "strict",
                           "--step", "0.1"});
  REQUIRE(result.code == 0);
  const json rows = json::parse(result.out);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 11);
  CHECK(rows.front()["c"] == 0.0);
  CHECK(rows.front()["value"] == 0.0);
  CHECK(rows.back()["c"] == 1.0);
  CHECK(rows.back()["value"] == 0.0);
  CHECK(rows[5]["c"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("optimize subcommand, finite scan") {
  const auto result = run({"optimize", "--finite", "2", "--k", "2",
                           "--strategy", "inclusive"});
  REQUIRE(result.code == 0);
  const json record = json::parse(result.out);
  CHECK(record["result"]["m_star"] == 1);
  CHECK(record["result"]["rational"] == "5/6");
  CHECK(record["result"]["method"] == "exhaustive_scan");
}

TEST_CASE("optimize subcommand, asymptotic refinement") {
  const auto result = run({"optimize", "--asymptotic", "--k", "2",
                           "--strategy", "inclusive"});
  REQUIRE(result.code == 0);
  const json record = json::parse(result.out);
  CHECK(std::fabs(record["result"]["c_star"].get<double>() - 0.386) <= 0.002);
  CHECK(std::fabs(record["result"]["value"].get<double>() - 0.701) <= 0.001);
  CHECK(record["result"]["method"] == "grid_refine");
}

TEST_CASE("optimize requires exactly one of --finite and --asymptotic") {
  CHECK(run({"optimize", "--k", "2", "--strategy", "strict"}).code == 2);
  CHECK(run({"optimize", "--finite", "2", "--asymptotic", "--k", "2"}).code == 2);
}

TEST_CASE("table subcommand emits csv rows at three decimals") {
  const auto result = run({"table", "--strategy", "inclusive", "--k", "2,3",
                           "--format", "csv"});
  REQUIRE(result.code == 0);
  std::istringstream lines(result.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "k,c_star,p_star");
  std::getline(lines, line);
  CHECK(line == "2,0.386,0.701");
  std::getline(lines, line);
  CHECK(line == "3,0.413,0.854");
}

TEST_CASE("table subcommand also emits json rows") {
  const auto result = run({"table", "--strategy", "strict", "--k", "1"});
  REQUIRE(result.code == 0);
  const json rows = json::parse(result.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["k"] == 1);
  CHECK(rows[0]["c_star"].get<double>() == doctest::Approx(0.368));
  CHECK(rows[0]["p_star"].get<double>() == doctest::Approx(0.368));
}

TEST_CASE("simulate subcommand reports a reproducible estimate") {
  const std::vector<std::string> args{"simulate", "--n", "2", "--k", "2", "--m", "1",
                                      "--strategy", "inclusive", "--trials", "20000",
                                      "--seed", "42"};
  const auto first = run(args);
  REQUIRE(first.code == 0);
  const json record = json::parse(first.out);
  const double estimate = record["result"]["estimate"].get<double>();
  const double stderr_ = record["result"]["std_error"].get<double>();
  CHECK(std::fabs(estimate - 5.0 / 6.0) <= 4.0 * stderr_);
  // identical invocation, identical wins
  const auto second = run(args);
  CHECK(json::parse(second.out)["result"]["wins"] ==
        record["result"]["wins"]);
}

TEST_CASE("csv output for scalar commands is one header and one row") {
  const auto result = run({"exact", "--n", "2", "--k", "2", "--m", "1",
                           "--strategy", "inclusive", "--format", "csv"});
  REQUIRE(result.code == 0);
  std::istringstream lines(result.out);
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "n,k,m,strategy,mode,rational,value");
  CHECK(row.starts_with("2,2,1,inclusive,exact,5/6,"));
}

TEST_CASE("argument errors exit with status 2") {
  CHECK(run({"exact", "--n", "2", "--k", "2"}).code == 2);               // missing --m
  CHECK(run({"exact", "--n", "2", "--k", "2", "--m", "9",
             "--strategy", "inclusive"}).code == 2);                     // m out of range
  CHECK(run({"limit", "--k", "2", "--c", "1.5", "--strategy", "strict"}).code == 2);
  CHECK(run({"brute", "--n", "13", "--k", "1", "--m", "1",
             "--strategy", "strict"}).code == 2);                        // beyond kn <= 12
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("series tolerance failures exit with status 1") {
  // at c = 1e-7 the default term budget cannot meet the tail bound
  const auto result = run({"limit", "--k", "2", "--c", "0.0000001",
                           "--strategy", "inclusive"});
  CHECK(result.code == 1);
  CHECK(result.err.find("numeric failure") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"exact", "--help"}).code == 0);
}

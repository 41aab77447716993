#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MORDELL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), f)) > 0) r.out.append(buf, n);
  int status = pclose(f);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("constants subcommand emits parseable JSON") {
  auto r = run_cli("constants E1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(!j.empty());
  const json& row = j[0];
  CHECK(row.at("curve").get<std::string>() == "E1");
  CHECK(std::stod(row.at("c1").get<std::string>()) ==
        doctest::Approx(4.709).epsilon(3e-3));
  CHECK(std::stod(row.at("c5").get<std::string>()) ==
        doctest::Approx(4.159).epsilon(3e-3));
  CHECK(std::stod(row.at("C1").get<std::string>()) ==
        doctest::Approx(72.251));
}

TEST_CASE("curve-info reports exact invariants and a tight height interval") {
  auto r = run_cli("curve-info E1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j[0].at("discriminant").get<std::string>() == "-496");
  CHECK(j[0].at("j_invariant").get<std::string>() == "6912/31");
  double lo = std::stod(j[0].at("hhat_generator_lo").get<std::string>());
  double hi = std::stod(j[0].at("hhat_generator_hi").get<std::string>());
  CHECK(lo <= 0.37752583);
  CHECK(hi >= 0.37752583);
  CHECK(hi - lo <= 2.5e-3);
}

TEST_CASE("solve subcommand finds the known nontrivial pairs") {
  auto r = run_cli("solve --curve E1 --family cn --n 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(std::stol(j[0].at("point_count").get<std::string>()) == 3);
  std::string pts = j[0].at("points").get<std::string>();
  CHECK(pts.find("OxO") != std::string::npos);
  CHECK(pts.find("(1,1)x(1,1)") != std::string::npos);
  CHECK(pts.find("(1,-1)x(1,1)") != std::string::npos);

  auto r2 = run_cli("solve --curve E2 --family cn --n 5");
  REQUIRE(r2.exit_code == 0);
  json j2 = json::parse(r2.out);
  CHECK(std::stol(j2[0].at("point_count").get<std::string>()) == 1);
  CHECK(j2[0].at("path").get<std::string>() == "integral");
}

TEST_CASE("lower-bound subcommand reports the crossover") {
  auto r = run_cli("lower-bound --curve E3 --family cn --n 4");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j[0].at("route").get<std::string>() == "trivial(11)");
  CHECK(std::stol(j[0].at("crossover_n").get<std::string>()) == 6);
}

TEST_CASE("csv and text formats, and byte-stable output") {
  auto a = run_cli("table --theorem cn --curve E1 --format csv");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out.rfind("report,key,value", 0) == 0);
  auto b = run_cli("table --theorem cn --curve E1 --format csv");
  CHECK(a.out == b.out);  // rerun must be byte-identical
  auto t = run_cli("table --theorem cn --curve E1 --format text");
  REQUIRE(t.exit_code == 0);
  CHECK(t.out.find("73024") != std::string::npos);
  CHECK(t.out.find("54") != std::string::npos);
}

TEST_CASE("exit codes for bad input") {
  // unknown curve label -> dataset validation error
  CHECK(run_cli("constants E9").exit_code == 2);
  // unknown output format -> parse (usage-class) error
  auto r = run_cli("constants E1 --format yaml");
  CHECK(r.exit_code != 0);
  // missing required subcommand -> CLI parser error
  CHECK(run_cli("").exit_code != 0);
}

TEST_CASE("curves file override") {
  std::string tmp = "/tmp/test_curves_override.jsonl";
  FILE* f = fopen(tmp.c_str(), "w");
  REQUIRE(f != nullptr);
  fputs(
      "{\"label\":\"X1\",\"A\":\"1\",\"B\":\"-1\",\"rank\":1,"
      "\"x_num\":\"1\",\"x_den\":\"1\",\"y_num\":\"1\",\"y_den\":\"1\","
      "\"torsion_order\":1}\n",
      f);
  fclose(f);
  auto r = run_cli("constants X1 --curves " + tmp);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(std::stod(j[0].at("h_weier").get<std::string>()) ==
        doctest::Approx(0.0));
  remove(tmp.c_str());
}

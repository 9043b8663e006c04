#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout; stderr is discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string(CYLDOM_CLI_PATH) + ' ' + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli count") {
  CHECK(cli("count --n 5").out.find("suitable=92") != std::string::npos);
  CHECK(cli("count --n 10").out.find("suitable=9004") != std::string::npos);
  const auto j = nlohmann::json::parse(cli("count --n 3 --format json").out);
  CHECK(j["suitable"] == 17);
  CHECK(cli("count --n 2").code == 2);
  CHECK(cli("count --n 13").code == 3);
  CHECK(cli("count").code == 2);
  CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("cli gamma2") {
  CHECK(cli("gamma2 --n 6 --m 7").out == "18\n");
  CHECK(cli("gamma2 --n 8 --m 5").out == "18\n");
  CHECK(cli("gamma2 --n 3 --m 1").code == 2);
  CHECK(cli("gamma2 --n 4 --m 4 --threads 2").out == "8\n");
}

TEST_CASE("cli recurrence") {
  const auto r = cli("recurrence --n 6");
  CHECK(r.code == 0);
  CHECK(r.out.find("m0=7 a=1 b=2") != std::string::npos);
  const auto j = nlohmann::json::parse(cli("recurrence --n 4 --format json").out);
  CHECK(j["m0"] == 6);
  CHECK(j["boundary"]["7"] == 12);
  CHECK(cli("recurrence --n 3 --max-steps 4").code == 4);
  CHECK(cli("--max-steps 4 recurrence --n 3").code == 4);
}

TEST_CASE("cli formula") {
  CHECK(cli("formula --n 3 --m 50").out == "52\n");
  CHECK(cli("formula --n 12 --m 7").out == "36\n");
  CHECK(cli("formula --n 4 --m 2").out == "4 (exception)\n");
  const auto j = nlohmann::json::parse(cli("formula --n 5 --m-min 2 --m-max 9 --format json").out);
  REQUIRE(j["values"].size() == 8);
  CHECK(j["values"][7]["gamma2"] == 19);
  CHECK(cli("formula --n 5").code == 2);
  CHECK(cli("formula --n 5 --m-min 9 --m-max 3").code == 2);
}

TEST_CASE("cli table") {
  const auto csv = cli("table --n-min 3 --n-max 4 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        "n,suitable,m0,a,b,boundary,remaining\n"
        "3,17,5,1,1,5=7,2=3;3=4;4=6\n"
        "4,40,6,2,3,6=11;7=12,2=4;3=6;4=8;5=9\n");
  const auto j = nlohmann::json::parse(cli("table --n-min 6 --n-max 7 --format json").out);
  REQUIRE(j.size() == 2);
  CHECK(j[1]["b"] == 5);
  CHECK(j[0]["suitable"] == 235);
  CHECK(cli("table --n-min 5 --n-max 4").code == 2);
}

TEST_CASE("cli verify") {
  CHECK(cli("verify --n 5 --m 4").code == 3);
  const auto r = cli("verify --n 5 --m 4 --budget 20");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("OK", 0) == 0);
}

TEST_CASE("cli initial-rule diagnostics") {
  CHECK(cli("gamma2 --n 4 --m 4 --initial-rule pattern").out == "7\n");
  const auto diff = cli("initial-diff --n 4");
  CHECK(diff.out.find("rule=strict initial=11 m0=6") != std::string::npos);
  CHECK(cli("gamma2 --n 4 --m 4 --initial-rule bogus").code == 2);
}

TEST_CASE("cli matrix cache") {
  const std::string dir = "cyldom_cli_test_cache";
  std::filesystem::remove_all(dir);
  CHECK(cli("gamma2 --n 5 --m 9 --cache " + dir).out == "19\n");
  CHECK(cli("gamma2 --n 5 --m 9 --cache " + dir).out == "19\n");
  CHECK(std::filesystem::exists(dir + "/tropmat_n5.bin"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli output is deterministic") {
  const auto a = cli("table --n-min 3 --n-max 6 --format json --threads 3");
  const auto b = cli("table --n-min 3 --n-max 6 --format json");
  CHECK(a.out == b.out);
}

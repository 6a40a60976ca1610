#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwh/cli.hpp"
#include "gwh/config.hpp"

using namespace gwh;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gwh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const Limits saved = limits();
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  set_limits(saved);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gwh_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("cli values") {
  const Run r = run({"gw", "--target-genus", "0", "--degree", "2", "--k", "[1,1]"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value"] == "1/2");
  CHECK_FALSE(j.contains("elapsed_ms"));
  const Run h = run({"hurwitz", "--degree", "2", "--profiles", "[[2],[2]]"});
  REQUIRE(h.code == 0);
  CHECK(json::parse(h.out)["value"] == "1/2");
  const Run p = run({"pk", "--k", "3", "--lambda", "[]"});
  REQUIRE(p.code == 0);
  CHECK(json::parse(p.out)["value"] == "7/960");
  const Run t = run({"--timing", "pk", "--k", "1", "--lambda", "[1]"});
  REQUIRE(t.code == 0);
  CHECK(json::parse(t.out).contains("elapsed_ms"));
}

TEST_CASE("cli pipelines and determinism") {
  for (const std::string p : {"character", "operator", "closed", "substitution"}) {
    const Run r = run({"gw", "--degree", "3", "--k", "[2,1,1]", "--connected", "--pipeline", p});
    REQUIRE(r.code == 0);
    const Run c = run({"gw", "--degree", "3", "--k", "[2,1,1]", "--connected", "--pipeline", "character"});
    CHECK(json::parse(r.out)["value"] == json::parse(c.out)["value"]);
    CHECK(r.out == run({"gw", "--degree", "3", "--k", "[2,1,1]", "--connected", "--pipeline", p}).out);
  }
  const Run a = run({"completed-cycle", "--k", "4"});
  const Run b = run({"--serial", "completed-cycle", "--k", "4", "--method", "fourier"});
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out)["terms"] == json::parse(b.out)["terms"]);
}

TEST_CASE("cli usage errors") {
  CHECK(run({"gw", "--bogus"}).code == 2);
  CHECK(run({"gw", "--degree", "2", "--k", "[1,"}).code == 2);
  CHECK(run({"gw", "--degree", "2", "--pipeline", "nope"}).code == 2);
  CHECK(run({"hurwitz", "--degree", "9", "--method", "oracle"}).code == 2);
  CHECK(run({"--character-limit", "4", "characters", "--degree", "6"}).code == 2);
  CHECK(run({"gw", "--target-genus", "2", "--degree", "1", "--k", "[2]", "--pipeline", "closed"}).code == 2);
}

TEST_CASE("cli config") {
  const auto path = temp_path("config.json");
  {
    std::ofstream f(path);
    f << R"({"character_degree": 5})";
  }
  CHECK(run({"--config", path.string(), "characters", "--degree", "6"}).code == 2);
  CHECK(run({"--config", path.string(), "characters", "--degree", "5"}).code == 0);
  {
    std::ofstream f(path);
    f << R"({"character_degre": 5})";
  }
  CHECK(run({"--config", path.string(), "characters", "--degree", "3"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("cli cache round trip") {
  const auto path = temp_path("cache.jsonl");
  std::filesystem::remove(path);
  const std::vector<std::string> args{"--cache", path.string(), "gw", "--degree", "2", "--k", "[1,1]"};
  const Run first = run(args);
  REQUIRE(first.code == 0);
  std::string stored = slurp(path);
  REQUIRE(stored.find("\"1/2\"") != std::string::npos);
  CHECK(run(args).out == first.out);
  stored.replace(stored.find("\"1/2\""), 5, "\"7/3\"");
  {
    std::ofstream f(path);
    f << stored;
  }
  CHECK(json::parse(run(args).out)["value"] == "7/3");
  std::filesystem::remove(path);
}

TEST_CASE("cli verify") {
  const Run r = run({"verify", "--suite", "characters", "--max-degree", "4"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);
  CHECK(run({"verify", "--suite", "nope"}).code != 0);
}

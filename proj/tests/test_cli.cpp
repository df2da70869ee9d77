/*
   Copyright 2026 The nacf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nacf/cli.hpp"
#include "nacf/error.hpp"

using namespace nacf;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text)
{
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

struct EnvGuard {
  explicit EnvGuard(const std::string &value) { setenv("NACF_CONFIG", value.c_str(), 1); }
  ~EnvGuard() { unsetenv("NACF_CONFIG"); }
};

} // namespace

TEST_CASE("disc 4 record")
{
  Run r = run({"disc", "4"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["command"] == "disc");
  CHECK(doc["summary"]["n"] == "4");
  CHECK(doc["summary"]["disc"] == "-200");
  CHECK(doc["summary"]["squarefree_part"] == "-2");
  CHECK(doc["summary"]["quad_field"] == "-2");
  CHECK(doc["summary"]["closed_form_agrees"] == true);

  Run m = run({"disc", "3", "--m", "4"});
  REQUIRE(m.code == 0);
  CHECK(json::parse(m.out)["summary"]["disc"] == "-24");
}

TEST_CASE("integers are serialized as strings")
{
  Run r = run({"disc", "60"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  std::function<void(const json &)> walk = [&](const json &v) {
    CHECK_FALSE(v.is_number_integer());
    if (v.is_structured())
      for (const auto &x : v)
        walk(x);
  };
  walk(doc);
  CHECK(doc["summary"]["disc"].get<std::string>().size() > 100);
}

TEST_CASE("usage errors exit 2")
{
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"disc"}).code == kExitUsage);
  CHECK(run({"disc", "x"}).code == kExitUsage);
  CHECK(run({"disc", "1"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "disc", "4"}).code == kExitUsage);
  CHECK(run({"--tol", "0", "roots", "4"}).code == kExitUsage);
  CHECK(run({"--window-lo", "100", "--window-hi", "100", "galois", "5"}).code == kExitUsage);
  CHECK(run({"irreducible", "2", "--m", "3"}).code == kExitUsage);
  CHECK(run({"bounds-fpn", "3", "9"}).code == kExitUsage);
  CHECK(run({"eta", "2"}).code == kExitUsage);
  CHECK(run({"--config", "/nonexistent/nacf.conf", "disc", "4"}).code == kExitUsage);
}

TEST_CASE("tsv emits one record per line")
{
  Run r = run({"--format", "tsv", "roots", "6"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(line.rfind("record=", 0) == 0);
    if (line.rfind("record=row", 0) == 0)
      ++rows;
    if (line.rfind("record=summary", 0) == 0)
      CHECK(line.find("bound_ok=true") != std::string::npos);
  }
  CHECK(rows == 5);
}

TEST_CASE("config precedence")
{
  std::string path = write_temp("nacf_cli_test.conf", "# comment\nformat = tsv\n\ntheta_nmax = 7\n");

  Run file = run({"--config", path, "theta"});
  REQUIRE(file.code == 0);
  CHECK(file.out.rfind("record=params\tn_max=7", 0) == 0);

  Run flag = run({"--config", path, "--format", "json", "theta"});
  REQUIRE(flag.code == 0);
  json doc = json::parse(flag.out);
  CHECK(doc["rows"].size() == 7);

  Run explicit_n = run({"--config", path, "theta", "3"});
  CHECK(explicit_n.out.rfind("record=params\tn_max=3", 0) == 0);

  {
    EnvGuard env(path);
    Run via_env = run({"theta"});
    REQUIRE(via_env.code == 0);
    CHECK(via_env.out.rfind("record=params", 0) == 0);
  }

  std::string bad = write_temp("nacf_cli_bad.conf", "colour = blue\n");
  CHECK(run({"--config", bad, "disc", "4"}).code == kExitUsage);
  std::string inverted = write_temp("nacf_cli_inv.conf", "window_lo = 50\nwindow_hi = 10\n");
  CHECK(run({"--config", inverted, "disc", "4"}).code == kExitUsage);
  CHECK(run({"--config", inverted, "--window-lo", "2", "disc", "4"}).code == 0);
}

TEST_CASE("config text parsing")
{
  RunConfig cfg;
  apply_config_text(cfg, "window_lo = 3\nwindow_hi=900\nscan_hi = 40\ntol = 1e-12\nthreads = 2\nprime_budget = 50\n");
  CHECK(cfg.window_lo == 3);
  CHECK(cfg.window_hi == 900);
  CHECK(cfg.scan_hi == 40);
  CHECK(cfg.tol == doctest::Approx(1e-12));
  CHECK(cfg.threads == 2);
  CHECK(cfg.prime_budget == 50);
  CHECK_NOTHROW(cfg.validate());
  CHECK_THROWS_AS(apply_config_text(cfg, "tol = abc"), DomainError);
  CHECK_THROWS_AS(apply_config_text(cfg, "no equals sign"), DomainError);
  cfg.tol = -1;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("thm51 1000")
{
  Run r = run({"thm51", "1000"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  // primes up to 1000 other than 2 and 5
  CHECK(doc["summary"]["checked"] == "166");
  CHECK(doc["summary"]["violations"] == "0");
}

TEST_CASE("subcommands succeed on small inputs")
{
  CHECK(run({"roots", "40"}).code == 0);
  CHECK(run({"bounds-fpn", "3", "1000000"}).code == 0);
  CHECK(run({"irreducible", "12"}).code == 0);
  CHECK(run({"irreducible", "9", "--m", "5"}).code == 0);
  CHECK(run({"subfield", "11"}).code == 0);
  CHECK(run({"theta", "50"}).code == 0);
  CHECK(run({"eta", "30"}).code == 0);
  CHECK(run({"identity-check"}).code == 0);
  CHECK(run({"--window-hi", "20000", "galois", "9"}).code == 0);
}

TEST_CASE("a violated property exits 1")
{
  // The disjoint window is too short for any statistical verdict.
  Run r = run({"--window-lo", "2", "--window-hi", "60", "galois", "5"});
  CHECK(r.code == kExitViolation);
  CHECK(r.err.find("violation: n = 5") != std::string::npos);
}

TEST_CASE("scan output is independent of thread count")
{
  Run a = run({"--scan-hi", "60", "--threads", "1", "scan", "--m", "3"});
  Run b = run({"--scan-hi", "60", "--threads", "4", "scan", "--m", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  json doc = json::parse(a.out);
  CHECK(doc["rows"].size() == 58);
}

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "akz/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "akzkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = akz::run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("exact values") {
  const Run r = run({"pbn", "--kind", "B", "--n", "1", "--k", "1"});
  CHECK(r.code == akz::kExitOk);
  CHECK(r.out == "1/2\n");
  CHECK(run({"pbn", "--kind", "C", "--n", "1", "--k", "1"}).out == "-1/2\n");
  CHECK(run({"pbn", "--kind", "B", "--n", "2", "--k", "-1"}).out == "4\n");
  CHECK(run({"pbn", "--kind", "B", "--n", "2", "--index", "neg:1"}).out == "4\n");
  CHECK(run({"akzeta", "eta", "--index", "neg:1", "--symbolic"}).out == "1*2^-s\n");
  CHECK(run({"akzeta", "eta", "--index", "1", "--at", "-2"}).out == "1/6\n");
}

TEST_CASE("numeric values") {
  const Run r = run({"mzv", "1,2"});
  CHECK(r.code == akz::kExitOk);
  CHECK(contains(r.out, "zeta(1,2) = 1.2020569031595942853997381615114499907"));
  CHECK(contains(r.out, "error <= "));
  const Run t = run({"tval", "2", "--t0"});
  CHECK(contains(t.out, "1.2337005501361698273543113749845188919"));
  CHECK(run({"level2", "psi", "--r", "1", "--k", "2", "--at", "1"}).code == akz::kExitOk);
  CHECK(run({"akzeta", "xi", "--index", "2", "--at", "1"}).code == akz::kExitOk);
}

TEST_CASE("verification commands") {
  CHECK(run({"verify-all", "--max-weight", "2"}).code == akz::kExitOk);
  CHECK(run({"pbn", "verify", "duality", "--max", "6"}).code == akz::kExitOk);
  CHECK(run({"akzeta", "verify", "etaxi", "--max-weight", "4"}).code == akz::kExitOk);
  CHECK(run({"level2", "verify", "ht1", "--max", "3"}).code == akz::kExitOk);
  const Run list = run({"verify-all", "--list"});
  CHECK(contains(list.out, "level2.thm58\n"));
  CHECK(contains(list.out, "pbn.duality\n"));
}

TEST_CASE("perturbation is detected") {
  const Run bad = run({"--inject-perturbation", "verify-all", "--max-weight", "4", "--family", "mzv.duality"});
  CHECK(bad.code == akz::kExitFail);
  CHECK(contains(bad.out, "fail mzv.duality"));
  CHECK(run({"verify-all", "--max-weight", "4", "--family", "mzv.duality"}).code == akz::kExitOk);
}

TEST_CASE("JSON reports") {
  const std::string path = "akzkit_cli_test.json";
  REQUIRE(run({"--json", path, "verify-all", "--max-weight", "3", "--family", "pbn"}).code == akz::kExitOk);
  std::ifstream f(path);
  const auto doc = nlohmann::json::parse(f);
  CHECK(doc["schema"] == "akzkit-report/1");
  REQUIRE(doc["reports"].is_array());
  CHECK(!doc["reports"].empty());
  for (const auto& r : doc["reports"]) {
    CHECK(r.contains("identity_id"));
    CHECK(r.contains("status"));
  }
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == akz::kExitUsage);
  CHECK(run({"frobnicate"}).code == akz::kExitUsage);
  CHECK(run({"mzv", "1,,2"}).code == akz::kExitUsage);
  CHECK(run({"mzv", "2,1"}).code == akz::kExitUsage);
  CHECK(run({"mzv", "x"}).code == akz::kExitUsage);
  CHECK(run({"pbn", "--n", "100000", "--k", "1"}).code == akz::kExitUsage);
  CHECK(run({"pbn", "--kind", "D", "--n", "1", "--k", "1"}).code == akz::kExitUsage);
  CHECK(run({"verify-all", "--max-weight", "99"}).code == akz::kExitUsage);
  CHECK(run({"verify-all", "--family", "nope"}).code == akz::kExitUsage);
  CHECK(run({"--tol", "2", "mzv", "2"}).code == akz::kExitUsage);
  CHECK(run({"akzeta", "xi", "--index", "neg:0,0", "--symbolic"}).code == akz::kExitUsage);
  const Run r = run({"mzv", "1,,2"});
  CHECK(contains(r.err, "usage error"));
}

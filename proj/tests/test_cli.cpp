#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CmdResult {
  int status;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(NIHO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  size_t n;
  std::string out;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int rc = pclose(f);
  return CmdResult{WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

}  // namespace

TEST_CASE("csv output is exact") {
  CmdResult r = run_cli("dist 5 2 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out == "value,count\n-26,216\n-1,238\n24,109\n49,54\n74,4\n99,3\n");
}

TEST_CASE("json output is schema stable") {
  CmdResult r = run_cli("dist 5 2 --format json");
  CHECK(r.status == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["p"] == 5);
  CHECK(doc["m"] == 2);
  CHECK(doc["q"] == "25");
  REQUIRE(doc["rows"].size() == 6);
  CHECK(doc["rows"][0]["value"] == "-26");
  CHECK(doc["rows"][0]["count"] == "216");
  CHECK(doc["rows"][5]["value"] == "99");
  CHECK(doc["rows"][5]["count"] == "3");
  CHECK(doc["checks"].is_array());
  CHECK(doc["checks"].empty());
}

TEST_CASE("identical runs are byte identical") {
  CmdResult a = run_cli("dist 7 3 --format json");
  CmdResult b = run_cli("dist 7 3 --format json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CmdResult c = run_cli("dist 7 3");
  CmdResult d = run_cli("dist 7 3");
  CHECK(c.out == d.out);
}

TEST_CASE("text output carries the parameters") {
  CmdResult r = run_cli("dist 11 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("p 11  m 1  q 11") != std::string::npos);
  CHECK(r.out.find("-12 38") != std::string::npos);
  CHECK(r.out.find("43 1") != std::string::npos);
}

TEST_CASE("verification from the command line") {
  CmdResult r = run_cli("dist 11 1 --verify");
  CHECK(r.status == 0);
  CHECK(r.out.find("pass") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  CmdResult j = run_cli("dist 11 1 --verify --format json");
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["checks"].size() == 6);
  for (const auto& c : doc["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("degenerate parameters exit with code two") {
  CHECK(run_cli("dist 19 1").status == 2);
  CHECK(run_cli("dist 7 2").status == 2);
  CHECK(run_cli("dist 4 1").status == 2);
  CHECK(run_cli("quantity lambda 3 1").status == 2);
}

TEST_CASE("usage errors exit with code sixty-four") {
  CHECK(run_cli("dist").status == 64);
  CHECK(run_cli("dist 5").status == 64);
  CHECK(run_cli("dist 5 0").status == 64);
  CHECK(run_cli("quantity nope 5 2").status == 64);
  CHECK(run_cli("dist 5 2 --format yaml").status == 64);
  CHECK(run_cli("frobnicate").status == 64);
}

TEST_CASE("quantities print exact integers") {
  CmdResult r = run_cli("quantity b3 11 1");
  CHECK(r.status == 0);
  CHECK(r.out == "13\n");
  CHECK(run_cli("quantity lambda 7 3").out == "-21\n");
  CHECK(run_cli("quantity aq 17 2").out == "-382\n");
  CHECK(run_cli("quantity n4 7 3").out == "52\n");
  CHECK(run_cli("quantity b5 7 3").out == "328176\n");
  CHECK(run_cli("quantity gamma5 11 1").out == "12\n");
}

TEST_CASE("quantity verification") {
  CmdResult r = run_cli("quantity n5 5 2 --verify");
  CHECK(r.status == 0);
  CHECK(r.out == "3\nverified\n");
  CHECK(run_cli("quantity lambda 11 2 --verify").status == 0);
  CHECK(run_cli("quantity aq 7 2 --verify").out == "98\nverified\n");
  CHECK(run_cli("quantity b3 5 2 --verify").out == "25\nverified\n");
  CHECK(run_cli("quantity gamma2 5 2 --verify").out == "12\nverified\n");
  CHECK(run_cli("quantity gamma5 5 2 --verify").out == "168\nverified\n");
  CHECK(run_cli("quantity b5 3 2 --verify").out == "2\nverified\n");
}

TEST_CASE("empty verification run") {
  CmdResult r = run_cli("verify-all 0");
  CHECK(r.status == 0);
  CHECK(r.out == "checks 0  failures 0\n");
}

TEST_CASE("quick verification sweep") {
  CmdResult r = run_cli("verify-all 13 --quick");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("failures 0") != std::string::npos);
}

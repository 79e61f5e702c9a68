#include "doctest.h"
#include "json.hpp"
#include "symsurg/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace symsurg;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string cli() {
  const char* path = std::getenv("SYMSURG_CLI");
  REQUIRE(path != nullptr);
  return "\"" + std::string(path) + "\"";
}

std::string data_file(const std::string& name) {
  const char* dir = std::getenv("SYMSURG_TEST_DATA");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

std::string scratch(const std::string& name) { return "/tmp/symsurg_test_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

} // namespace

TEST_CASE("the golden pipeline is reproduced bit for bit") {
  RunResult bx = run(cli() + " build-x");
  CHECK(bx.exit_code == 0);
  CHECK(bx.out == slurp(data_file("golden_build_x.json")));
  spill(scratch("stage_x.json"), bx.out);

  RunResult sf = run(cli() + " seifert -p 2 < " + scratch("stage_x.json"));
  CHECK(sf.exit_code == 0);
  CHECK(sf.out == slurp(data_file("golden_seifert_p2.json")));
  spill(scratch("stage_m.json"), sf.out);

  RunResult cs = run(cli() + " check-sasakian < " + scratch("stage_m.json"));
  CHECK(cs.exit_code == 0);
  CHECK(cs.out == slurp(data_file("golden_check_sasakian.json")));

  RunResult piped =
      run(cli() + " build-x | " + cli() + " seifert -p 2 | " + cli() + " check-sasakian");
  CHECK(piped.exit_code == 0);
  CHECK(piped.out == cs.out);

  nlohmann::json report = nlohmann::json::parse(cs.out);
  CHECK(report["schema"] == 1);
  CHECK(report["results"]["verdict"]["verdict"] == "obstructed");
  CHECK(report["results"]["verdict"]["chain"].back()["statement"] ==
        "b = 36 > 9: no smooth Kahler surface carries the configuration");
  CHECK(report["results"]["homology"]["rank"] == "35");

  nlohmann::json built = nlohmann::json::parse(bx.out);
  CHECK(built["results"]["manifold"]["euler_characteristic"] == "38");
  for (const auto& check : built["checks"]) {
    CHECK(check["pass"] == true);
    CHECK(!check["anchor"].get<std::string>().empty());
  }
}

TEST_CASE("stage flags and exit codes") {
  SUBCASE("the intermediate stage stops at chi 36") {
    RunResult z = run(cli() + " build-x --stop-after z");
    CHECK(z.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(z.out);
    CHECK(report["results"]["manifold"]["euler_characteristic"] == "36");
    CHECK(report["results"]["manifold"]["surfaces"].size() == 34);
  }

  SUBCASE("the lagrangian report is appended on request") {
    RunResult r = run(cli() + " build-x --stop-after z --verify-lagrangian");
    CHECK(r.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(report["results"]["lagrangian"]["all_pass"] == true);
    CHECK(report["checks"].back()["name"] == "lagrangian-configuration");
  }

  SUBCASE("output goes to a file with -o") {
    RunResult r = run(cli() + " classify-local-model 12 2 3 -o " + scratch("out.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    nlohmann::json report = nlohmann::json::parse(slurp(scratch("out.json")));
    CHECK(report["results"]["local_model"]["label"] == "c");
    CHECK(report["results"]["local_model"]["d"] == "2");
  }

  SUBCASE("a composite p is refused") {
    RunResult r = run(cli() + " seifert " + scratch("stage_x.json") + " -p 4 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("p must be prime") != std::string::npos);
  }

  SUBCASE("malformed input exits 2") {
    spill(scratch("bad.json"), "{\"schema\": 1,");
    RunResult r = run(cli() + " seifert " + scratch("bad.json") + " -p 2 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("not valid JSON") != std::string::npos);
  }

  SUBCASE("a multiplicity clash is named") {
    ManifoldModel bad;
    bad.euler_characteristic = 5;
    bad.pi1.state = Pi1State::yes;
    bad.surfaces.push_back({"D", 1, {SurfaceFlag::symplectic}, {}});
    bad.surfaces.push_back({"H", 1, {SurfaceFlag::symplectic}, {}});
    bad.surfaces.push_back({"K", 1, {SurfaceFlag::symplectic}, {}});
    bad.gram = IntMat{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    spill(scratch("gcd.json"), manifold_manifest(bad));
    RunResult r = run(cli() + " seifert " + scratch("gcd.json") + " -p 2 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("not coprime: gcd(2, 4) = 2") != std::string::npos);
  }

  SUBCASE("missing arguments exit 2") {
    CHECK(run(cli() + " 2>/dev/null").exit_code == 2);
    CHECK(run(cli() + " bogus 2>/dev/null").exit_code == 2);
    CHECK(run(cli() + " seifert " + scratch("stage_x.json") + " 2>/dev/null").exit_code == 2);
    CHECK(run(cli() + " classify-local-model 12 2 2>/dev/null").exit_code == 2);
    CHECK(run(cli() + " obstruct --surfaces 3 2>/dev/null").exit_code == 2);
  }
}

TEST_CASE("check-sasakian decides from a bare homology description") {
  spill(scratch("small.json"),
        R"({"schema": 1, "h1_zero": true, "rank": "0",
            "torsion": [{"modulus": "2", "copies": "2"}]})");
  RunResult r = run(cli() + " check-sasakian " + scratch("small.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"verdict\": \"inconclusive\"") != std::string::npos);

  spill(scratch("shape.json"),
        R"({"schema": 1, "h1_zero": true, "rank": "0",
            "torsion": [{"modulus": "6", "copies": "2"}]})");
  RunResult bad = run(cli() + " check-sasakian " + scratch("shape.json") + " 2>&1");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("corollary hypotheses unmet") != std::string::npos);

  HomologyReport h;
  h.h1_zero = true;
  h.rank = 11;
  Int mod = 1;
  for (int i = 0; i < 12; ++i) {
    mod *= 2;
    h.torsion.push_back({mod, 2});
  }
  spill(scratch("tori.json"), homology_manifest(h));
  CHECK(run(cli() + " check-sasakian " + scratch("tori.json")).exit_code == 1);
  RunResult remark = run(cli() + " check-sasakian " + scratch("tori.json") + " --assume-genus-one-remark");
  CHECK(remark.exit_code == 0);
  CHECK(remark.out.find("\"verdict\": \"obstructed\"") != std::string::npos);
}

TEST_CASE("obstruct and the scan run standalone") {
  std::string genera;
  for (int rep = 0; rep < 3; ++rep) genera += "1,1,1,1,1,1,1,1,1,3,";
  genera += "1,1,2,1,1,2";
  RunResult r = run(cli() + " obstruct --surfaces 36 --genera " + genera);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"verdict\": \"obstructed\"") != std::string::npos);
  CHECK(r.out.find("\"name\": \"slope\"") != std::string::npos);

  CHECK(run(cli() + " obstruct --surfaces 9 --genera 3,3,1,1,1,1,1,1,1").exit_code == 1);
  CHECK(run(cli() + " obstruct --surfaces 10 --genera 3,3,1,1,1,1,1,1,1,1").exit_code == 0);
  CHECK(run(cli() + " obstruct --surfaces 2 --genera 0,1 2>/dev/null").exit_code == 2);

  RunResult scan = run(cli() + " classify-local-model --scan 30");
  CHECK(scan.exit_code == 0);
  nlohmann::json report = nlohmann::json::parse(scan.out);
  CHECK(report["results"]["violations"] == "0");
  CHECK(report["checks"][0]["pass"] == true);

  RunResult ineffective = run(cli() + " classify-local-model 4 0 2 2>&1");
  CHECK(ineffective.exit_code == 2);
  CHECK(ineffective.out.find("not effective") != std::string::npos);
}

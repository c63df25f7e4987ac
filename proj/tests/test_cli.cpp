// Golden tests driving the installed CLI binary end to end. The binary path
// comes from the build; each OEIS invocation gets a throwaway cache.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(PARKRANK_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = ::fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int status = ::pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

/// Runs with PARKRANK_OEIS_CACHE pointed at a fresh directory.
RunResult run_cli_fresh_cache(const std::string& args) {
  static int serial = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("parkrank_cli_cache_" + std::to_string(::getpid()) +
                        "_" + std::to_string(serial++));
  fs::create_directories(dir);
  const std::string cmd = "PARKRANK_OEIS_CACHE=" + dir.string() + " " +
                          std::string(PARKRANK_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  RunResult result;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = ::fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int status = ::pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::error_code ec;
  fs::remove_all(dir, ec);
  return result;
}

}  // namespace

TEST_CASE("classify verdicts and exit codes") {
  auto member = run_cli("classify --kind upf 1,1,2");
  CHECK(member.code == 0);
  CHECK(member.out == "upf member: 1,1,2\n");

  auto non_member = run_cli("classify --kind fr 1,3,3");
  CHECK(non_member.code == 1);
  CHECK(non_member.out == "fr non-member: 1,3,3\n");

  auto rupf = run_cli("classify --kind rupf -r 4 3,2,1,4,4,4");
  CHECK(rupf.code == 1);
  CHECK(rupf.out == "rupf non-member: 3,2,1,4,4,4 (r=4)\n");

  // Space separated entries arrive as separate argv words.
  auto spaced = run_cli("classify --kind upf 1 1 2");
  CHECK(spaced.code == 0);
  CHECK(spaced.out == "upf member: 1,1,2\n");
}

TEST_CASE("classify explain traces") {
  auto pf = run_cli("classify --kind pf 1,1 --explain");
  CHECK(pf.code == 0);
  CHECK(pf.out ==
        "pf member: 1,1\n"
        "car 1 prefers 1 -> spot 1\n"
        "car 2 prefers 1 -> spot 2\n"
        "total displacement: 1\n"
        "lucky cars: 1\n");

  auto fr = run_cli("classify --kind fr 1,3,3 --explain");
  CHECK(fr.code == 1);
  CHECK(fr.out ==
        "fr non-member: 1,3,3\n"
        "sorted: 1,3,3\n"
        "position 1: value 1 starts rank 1\n"
        "position 2: value 3 must equal previous value 1 or position 2\n");

  auto rupf = run_cli("classify --kind rupf -r 4 3,2,1,4,4,4 --explain");
  CHECK(rupf.code == 1);
  CHECK(rupf.out ==
        "rupf non-member: 3,2,1,4,4,4 (r=4)\n"
        "first 4 entries: 3,2,1,4 (distinct)\n"
        "car 1 prefers 3 -> spot 3\n"
        "car 2 prefers 2 -> spot 2\n"
        "car 3 prefers 1 -> spot 1\n"
        "car 4 prefers 4 -> spot 4\n"
        "car 5 prefers 4 -> spot 5\n"
        "car 6 prefers 4 -> no spot\n");
}

TEST_CASE("classify usage errors") {
  CHECK(run_cli("classify --kind upf 1,,2").code == 2);
  CHECK(run_cli("classify --kind rfr 1,2").code == 2);
  CHECK(run_cli("classify --kind pf -r 2 1,2").code == 2);
  CHECK(run_cli("classify --kind bogus 1,2").code == 2);
  CHECK(run_cli("classify 1,2").code == 2);
}

TEST_CASE("classify json output") {
  auto res = run_cli("classify --kind fr 1,2,2 --json");
  CHECK(res.code == 0);
  const json out = json::parse(res.out);
  CHECK(out["kind"] == "fr");
  CHECK(out["tuple"] == json::array({1, 2, 2}));
  CHECK(out["member"] == true);

  auto res_r = run_cli("classify --kind rfr -r 2 1,3,1 --json --explain");
  CHECK(res_r.code == 0);
  const json out_r = json::parse(res_r.out);
  CHECK(out_r["r"] == 2);
  CHECK(out_r["member"] == true);
  CHECK(out_r["trace"].is_array());
}

TEST_CASE("map subcommand golden outputs") {
  auto blocks = run_cli("map blocks 8,1,5,5,1,2,4,7");
  CHECK(blocks.code == 0);
  CHECK(blocks.out == "112|4|55|7|8\n");

  auto psi = run_cli("map psi 2,4,7,4,1,5,7,8,2,9");
  CHECK(psi.code == 0);
  CHECK(psi.out == "2,4,7,4,1,4,7,7,2,7\n");

  auto phi = run_cli("map phi 2,4,7,4,1,4,7,7,2,7");
  CHECK(phi.code == 0);
  CHECK(phi.out == "2,4,7,4,1,5,7,8,2,9\n");

  auto rearr = run_cli("map rearrangements 1,2,2 --list");
  CHECK(rearr.code == 0);
  CHECK(rearr.out == "3\n1,2,2\n2,1,2\n2,2,1\n");

  auto count_only = run_cli("map rearrangements 1,2,2");
  CHECK(count_only.out == "3\n");

  // Multi-digit values force comma separated blocks.
  auto wide = run_cli("map blocks 1,1,3,4,5,6,7,8,9,10");
  CHECK(wide.code == 0);
  CHECK(wide.out == "1,1|3|4|5|6|7|8|9|10\n");
}

TEST_CASE("map domain violations exit 1") {
  auto phi = run_cli("map phi 1,3,3", /*merge_stderr=*/true);
  CHECK(phi.code == 1);
  CHECK(phi.out.find("Fubini ranking") != std::string::npos);

  CHECK(run_cli("map psi 1,1,1").code == 1);
  CHECK(run_cli("map blocks 2,2").code == 1);
  CHECK(run_cli("map rearrangements 2,2").code == 1);
  // Parse failures are usage errors, not domain errors.
  CHECK(run_cli("map phi 1,x").code == 2);
  CHECK(run_cli("map sideways 1,2").code == 2);
}

TEST_CASE("map json uses json lines for enumerations") {
  auto res = run_cli("map rearrangements 1,2,2 --json --list");
  CHECK(res.code == 0);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < res.out.size()) {
    const auto eol = res.out.find('\n', start);
    lines.push_back(res.out.substr(start, eol - start));
    start = eol + 1;
  }
  REQUIRE(lines.size() == 4);
  const json head = json::parse(lines[0]);
  CHECK(head["direction"] == "rearrangements");
  CHECK(head["count"] == "3");
  CHECK(json::parse(lines[1]) == json::array({1, 2, 2}));
  CHECK(json::parse(lines[2]) == json::array({2, 1, 2}));
  CHECK(json::parse(lines[3]) == json::array({2, 2, 1}));
}

TEST_CASE("count modes and golden values") {
  auto both = run_cli("count upf 7 --both");
  CHECK(both.code == 0);
  CHECK(both.out == "exhaustive: 47293\nclosed-form: 47293\nmatch: yes\n");

  auto rfr = run_cli("count rfr 6 -r 3 --closed-form");
  CHECK(rfr.code == 0);
  CHECK(rfr.out == "closed-form: 3210\n");

  auto inter = run_cli("count fr-and-upf 7 --exhaustive");
  CHECK(inter.code == 0);
  CHECK(inter.out == "exhaustive: 35280\n");

  auto pf = run_cli("count pf 5");
  CHECK(pf.code == 0);
  CHECK(pf.out == "closed-form: 1296\n");
}

TEST_CASE("count json schema") {
  auto res = run_cli("count upf 5 --both --json");
  CHECK(res.code == 0);
  const json out = json::parse(res.out);
  CHECK(out["family"] == "upf");
  CHECK(out["n"] == 5);
  CHECK(out["r"].is_null());
  CHECK(out["exhaustive"] == "541");
  CHECK(out["closed_form"] == "541");
  CHECK(out["match"] == true);

  auto rres = run_cli("count rupf 4 -r 2 --closed-form --json");
  const json rout = json::parse(rres.out);
  CHECK(rout["r"] == 2);
  CHECK(rout["closed_form"] == "62");
  CHECK(rout["exhaustive"].is_null());
  CHECK(rout["match"].is_null());
}

TEST_CASE("count guards and budget cap") {
  CHECK(run_cli("count upf 9 --exhaustive").code == 2);
  CHECK(run_cli("count upf 9 --both").code == 2);
  CHECK(run_cli("count upf 9 --closed-form").code == 0);
  CHECK(run_cli("count upf 4 --exhaustive --max-n 4").code == 0);
  CHECK(run_cli("count fr-and-upf 4 --closed-form").code == 2);
  CHECK(run_cli("count fr-and-upf 4 --both").code == 2);
  CHECK(run_cli("count rfr 4 --closed-form").code == 2);
  CHECK(run_cli("count pf 4 -r 2").code == 2);
  CHECK(run_cli("count pf 4 --both --exhaustive").code == 2);
  CHECK(run_cli("count bogus 4").code == 2);
  CHECK(run_cli("count rfr 4 -r 9 --closed-form").code == 2);
}

TEST_CASE("table reproduces the reference columns") {
  auto col1 = run_cli("table --r-max 1 --m-max 5 --csv");
  CHECK(col1.code == 0);
  CHECK(col1.out == "m,r=1\n1,1\n2,3\n3,13\n4,75\n5,541\n");

  auto two = run_cli("table --r-max 2 --m-max 2 --csv");
  CHECK(two.code == 0);
  CHECK(two.out == "m,r=1,r=2\n1,1,0\n2,3,2\n");

  auto text = run_cli("table");
  CHECK(text.code == 0);
  CHECK(text.out.find("r=8") != std::string::npos);
  CHECK(text.out.find("545835") != std::string::npos);
  CHECK(text.out.find("40320") != std::string::npos);

  auto jres = run_cli("table --json");
  const json out = json::parse(jres.out);
  CHECK(out["rows"].size() == 8);
  CHECK(out["rows"][7]["m"] == 8);
  CHECK(out["rows"][7]["values"][7] == "40320");
  CHECK(out["rows"][2]["values"][1] == "10");

  CHECK(run_cli("table --r-max 0").code == 2);
}

TEST_CASE("oeis-check offline verdicts") {
  auto fubini = run_cli_fresh_cache("oeis-check A000670 --limit 8 --offline");
  CHECK(fubini.code == 0);
  CHECK(fubini.out.find("A000670: comparing 8 terms (shift 0)") == 0);
  CHECK(fubini.out.find("all match\n") != std::string::npos);

  auto inter = run_cli_fresh_cache("oeis-check A080599 --limit 7 --offline");
  CHECK(inter.code == 0);
  CHECK(inter.out.find("all match") != std::string::npos);

  auto fub2 = run_cli_fresh_cache("oeis-check A232472 --limit 6 --offline");
  CHECK(fub2.code == 0);

  auto stirling = run_cli_fresh_cache("oeis-check A143494 --limit 6 --offline");
  CHECK(stirling.code == 0);

  auto unknown = run_cli_fresh_cache("oeis-check A999999 --offline");
  CHECK(unknown.code == 2);

  auto badid = run_cli_fresh_cache("oeis-check nope --offline");
  CHECK(badid.code == 2);
}

TEST_CASE("oeis-check json report") {
  auto res = run_cli_fresh_cache("oeis-check A000670 --limit 4 --offline --json");
  CHECK(res.code == 0);
  const json out = json::parse(res.out);
  CHECK(out["id"] == "A000670");
  CHECK(out["shift"] == 0);
  CHECK(out["all_match"] == true);
  REQUIRE(out["rows"].size() == 4);
  CHECK(out["rows"][3]["computed"] == "13");
  CHECK(out["rows"][3]["reference"] == "13");
  CHECK(out["rows"][3]["match"] == true);
}

TEST_CASE("top level usage errors") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("bogus").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("classify --help").code == 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(ARRANGE_BIN) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/arr_cli_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("analyze json report for the rank-5 example") {
  RunResult r = run("analyze builtin:ex51 --json");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["arrangement"] == json({{"dim", 5}, {"count", 11}, {"rank", 5}}));
  CHECK(rep["formality"]["formal"] == true);
  CHECK(rep["formality"]["dim_F"] == 6);
  CHECK(rep["formality"]["dim_F2"] == 6);
  CHECK(rep["formality"]["pi2_rank"] == 6);
  CHECK(rep["formality"]["profile"] == json({{"2", true}, {"3", true}, {"4", true}}));
  CHECK(rep["formality"]["totally_formal"] == false);
  CHECK(rep["lc"]["status"] == "ok");
  CHECK(rep["lc"]["basis"] == json::array({1, 2, 3, 4, 5}));
  CHECK(rep["lc"]["trace_length"] == 6);
  CHECK(rep["factorization"]["nice"] == false);
  CHECK(rep["factorization"]["partition"].is_null());
  CHECK(rep["chambers"]["status"] == "ok");
  CHECK(rep["chambers"]["simplicial"] == false);
  CHECK(rep["timings"] == json({{"status", "disabled"}}));
}

TEST_CASE("analyze reports the restriction failing at level three") {
  RunResult r = run("analyze builtin:ex51_restriction --json");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["arrangement"]["count"] == 9);
  CHECK(rep["arrangement"]["rank"] == 4);
  CHECK(rep["formality"]["formal"] == true);
  CHECK(rep["formality"]["pi2_rank"] == 5);
  CHECK(rep["formality"]["profile"] == json({{"2", true}, {"3", false}}));
}

TEST_CASE("analyze emits byte-identical output across runs") {
  for (const char* subject : {"builtin:bn:3 --json", "builtin:kn:3 --json", "builtin:braid:3"}) {
    RunResult a = run(std::string("analyze ") + subject);
    RunResult b = run(std::string("analyze ") + subject);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("factorization and chambers sections on bn(3)") {
  RunResult r = run("analyze builtin:bn:3 --json");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["factorization"]["nice"] == true);
  CHECK(rep["factorization"]["partition"].size() == 3);
  CHECK(rep["factorization"]["section"].size() == 3);
  CHECK(rep["chambers"] == json({{"status", "ok"}, {"count", 48}, {"simplicial", true}}));
}

TEST_CASE("skip flags replace sections with status strings") {
  RunResult r = run("analyze builtin:braid:3 --json --skip lc --skip factor --skip chambers");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["lc"]["status"] == "skipped");
  CHECK(rep["lc"]["basis"].is_null());
  CHECK(rep["factorization"]["status"] == "skipped");
  CHECK(rep["factorization"]["nice"].is_null());
  CHECK(rep["chambers"]["status"] == "skipped");
}

TEST_CASE("chamber section statuses for caps and non-essential input") {
  json braid4 = json::parse(run("analyze builtin:braid:4 --json").out);
  CHECK(braid4["chambers"]["status"] == "not-essential");
  json capped = json::parse(run("analyze builtin:boolean:3 --json --chamber-cap 2").out);
  CHECK(capped["chambers"]["status"] == "exceeded");
  json fine = json::parse(run("analyze builtin:boolean:3 --json").out);
  CHECK(fine["chambers"]["count"] == 8);
}

TEST_CASE("max-k cuts the profile") {
  json rep = json::parse(run("analyze builtin:ex51_restriction --json --max-k 2").out);
  CHECK(rep["formality"]["profile"] == json({{"2", true}}));
}

TEST_CASE("timings appear only on request") {
  json rep = json::parse(run("analyze builtin:boolean:2 --json --timings").out);
  CHECK(rep["timings"]["status"] == "ok");
  CHECK(rep["timings"]["total_ms"].is_number_integer());
}

TEST_CASE("restrict serializes the restricted arrangement") {
  RunResult r = run("restrict builtin:boolean:3 --flat 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "dim 2\n1 0\n0 1\n");
}

TEST_CASE("localize serializes the localization in ambient coordinates") {
  RunResult r = run("localize builtin:ex51 --flat 1,2,4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "dim 5\n1 0 0 0 0\n0 1 0 0 0\n0 0 0 1 0\n1 1 0 1 0\n");
}

TEST_CASE("out flag writes the same bytes to a file") {
  std::string path = "/tmp/arr_cli_out.json";
  RunResult direct = run("analyze builtin:boolean:2 --json");
  RunResult filed = run("analyze builtin:boolean:2 --json --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == direct.out);
}

TEST_CASE("file sources parse and analyze") {
  std::string path = write_temp("tri.arr", "# three concurrent lines\ndim 2\n1 0\n0 1\n1 1\n");
  RunResult r = run("analyze " + path + " --json");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["arrangement"] == json({{"dim", 2}, {"count", 3}, {"rank", 2}}));
  CHECK(rep["chambers"]["count"] == 6);
  CHECK(rep["factorization"]["partition"] == json::array({{1, 2}, {3}}));
}

TEST_CASE("verify passes on catalog entries") {
  for (const char* subject :
       {"builtin:boolean:3", "builtin:braid:3", "builtin:kn:3", "builtin:bn:2"}) {
    RunResult r = run(std::string("verify ") + subject);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verify: ok\n") != std::string::npos);
  }
}

TEST_CASE("exit codes distinguish usage, parse, and domain errors") {
  CHECK(run("").exit_code == 1);                                   // no subcommand
  CHECK(run("--help").exit_code == 0);
  CHECK(run("analyze").exit_code == 1);                            // missing source
  CHECK(run("analyze builtin:nosuch").exit_code == 1);             // unknown name
  CHECK(run("analyze builtin:boolean:0").exit_code == 1);          // bad parameter
  CHECK(run("analyze builtin:boolean:x").exit_code == 1);
  CHECK(run("analyze --skip bogus builtin:boolean:2").exit_code == 1);
  CHECK(run("restrict builtin:boolean:3 --flat 9").exit_code == 1);
  CHECK(run("restrict builtin:boolean:3 --flat a").exit_code == 1);
  CHECK(run("analyze /tmp/arr_cli_missing.arr").exit_code == 2);   // unreadable
  std::string bad = write_temp("bad.arr", "dim 2\n1 0\nbogus x\n");
  CHECK(run("analyze " + bad).exit_code == 2);
  std::string dup = write_temp("dup.arr", "dim 2\n2 0\n1 0\n");
  RunResult r = run("analyze " + dup, true);
  CHECK(r.exit_code == 2);  // duplicate hyperplane after normalization
  CHECK(r.out.find("parse error") != std::string::npos);
}

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "center_kit/fusion_io.hpp"
#include "doctest.h"

namespace {

struct Result {
  int status = -1;
  std::string out, err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result run(const std::string& args) {
  static int counter = 0;
  const auto err = std::filesystem::temp_directory_path() /
                   ("center_kit_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".err");
  const std::string cmd = std::string(CK_CLI_PATH) + " " + args + " 2>" + err.string();
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.err = slurp(err);
  std::filesystem::remove(err);
  return r;
}

std::string data(const char* name) { return std::string(CK_DATA_DIR) + "/" + name; }

int count_lines_starting_with_digit(const std::string& s) {
  std::istringstream in(s);
  std::string line;
  int n = 0;
  while (std::getline(in, line))
    if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) ++n;
  return n;
}

}  // namespace

TEST_CASE("center prints one row per simple") {
  const Result r = run("center " + data("fib.json"));
  CHECK(r.status == 0);
  CHECK(count_lines_starting_with_digit(r.out) == 4);
  CHECK(r.out.find("result: PASS") != std::string::npos);
  CHECK(r.out.find("fingerprint: " + ck::fingerprint(ck::builtin("fib"))) != std::string::npos);
  CHECK(r.err.find("wall time") != std::string::npos);
}

TEST_CASE("monad-check output is deterministic") {
  const std::string args = "monad-check " + data("vec_z3.json") + " --trials 50 --seed 7";
  const Result a = run(args), b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  const Result c = run(args + " --json"), d = run(args + " --json");
  CHECK(c.out == d.out);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["pass"] == true);
  CHECK(j["data"]["trials"] == 50);
  CHECK(j["checks"].size() == 5);
  for (const auto& rec : j["checks"]) {
    CHECK(rec.contains("residual"));
    CHECK(rec.contains("threshold"));
  }
}

TEST_CASE("count-equivalence on Ising") {
  const Result r = run("count-equivalence " + data("ising.json"));
  CHECK(r.status == 0);
  CHECK(r.out.find("9 = 9") != std::string::npos);
}

TEST_CASE("misspelled unit is reported with its code") {
  std::string text = slurp(data("fib.json"));
  const auto pos = text.find("\"unit\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"uint\"");
  const auto path = std::filesystem::temp_directory_path() / ("center_kit_bad_" + std::to_string(::getpid()) + ".json");
  std::ofstream(path) << text;
  const Result r = run("validate " + path.string());
  std::filesystem::remove(path);
  CHECK(r.status != 0);
  CHECK(r.err.find("E_UNIT_MISSING") != std::string::npos);
}

TEST_CASE("run configuration is validated") {
  CHECK(run("monad-check fib --tolerance 0").err.find("E_USAGE") != std::string::npos);
  CHECK(run("monad-check fib --trials 0").status != 0);
  CHECK(run("center fib --mode fast").status != 0);
  CHECK(run("center").status != 0);
  CHECK(run("validate no_such_file.json").err.find("E_USAGE") != std::string::npos);
}

TEST_CASE("a failing check gives a nonzero exit") {
  CHECK(run("validate fib --tolerance 1e-300").status == 1);
  CHECK(run("validate fib").status == 0);
}

TEST_CASE("export, opposite and deligne emit fusion data") {
  const Result e = run("export fib");
  CHECK(e.status == 0);
  CHECK(e.out == slurp(data("fib.json")));
  const Result o = run("opposite " + data("ising.json"));
  CHECK(o.status == 0);
  CHECK(ck::parse_fusion_data(o.out).rank() == 3);
  const Result d = run("deligne vec_z2 " + data("fib.json"));
  CHECK(d.status == 0);
  const ck::FusionCategory P = ck::parse_fusion_data(d.out);
  CHECK(P.rank() == 4);
  CHECK(P.label_name(3) == "1|tau");
}

TEST_CASE("other verbs pass on the built-ins") {
  for (const char* verb : {"validate", "bimonad-check", "canonical-algebra", "bimodule-roundtrip"}) {
    CAPTURE(verb);
    const Result r = run(std::string(verb) + " vec_z2 --trials 2");
    CHECK(r.status == 0);
  }
  const Result b = run("center vec_z2 --emit-braidings --json");
  CHECK(b.status == 0);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["data"]["simples"].size() == 4);
  CHECK(j["data"]["simples"][0].contains("braiding"));
}

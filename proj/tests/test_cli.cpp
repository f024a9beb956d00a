#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "symcrit/io.hpp"

using namespace symcrit;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string cli_path() {
  const char* bin = std::getenv("SYMCRIT_CLI");
  REQUIRE_MESSAGE(bin != nullptr,
                  "SYMCRIT_CLI must point at the command line binary");
  return bin;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch_dir() {
  static std::filesystem::path dir = [] {
    std::filesystem::path d = std::filesystem::temp_directory_path() /
                              ("symcrit-cli-" + std::to_string(getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  std::filesystem::path p = scratch_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  REQUIRE(bool(out));
  return p.string();
}

std::string sphere_json(std::uint32_t prime) {
  PrimeField field(prime);
  PolyRingPtr x = make_x_ring(field, 3);
  MPoly f1 = MPoly::from_list(
      x, {{1, {2, 0, 0}}, {1, {0, 2, 0}}, {1, {0, 0, 2}}, {-6, {0, 0, 0}}});
  MPoly phi = MPoly::from_list(x, {{1, {1, 1, 1}},
                                   {-3, {1, 0, 0}},
                                   {-3, {0, 1, 0}},
                                   {-3, {0, 0, 1}}});
  return problem_to_json(ProblemInstance({f1}, phi));
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve writes a result file that verifies") {
  std::string problem = write_file("sphere.json", sphere_json(65521));
  std::string result = (scratch_dir() / "sphere.out.json").string();

  RunResult solve = run("solve " + problem + " --seed 1 --out " + result);
  CHECK(solve.code == 0);

  LoadedOutput out = load_output(result);
  CHECK(out.prime == 65521);
  CHECK(out.seed == 1);
  REQUIRE(out.entries.size() == 3);
  int total = 0;
  for (const OrbitEntry& e : out.entries) total += e.param.degree();
  CHECK(total == 6);

  RunResult verify = run("verify " + result + " " + problem);
  CHECK(verify.code == 0);
  CHECK(contains(verify.out, "verified: 3 entries, total degree 6"));
}

TEST_CASE("solve prints to stdout without --out") {
  std::string problem = write_file("sphere2.json", sphere_json(65521));
  RunResult solve = run("solve " + problem + " --seed 1");
  CHECK(solve.code == 0);
  LoadedOutput out = parse_output(solve.out);
  CHECK(out.entries.size() == 3);
}

TEST_CASE("identical seeds give identical output bytes") {
  std::string problem = write_file("sphere3.json", sphere_json(65521));
  RunResult a = run("solve " + problem + " --seed 9");
  RunResult b = run("solve " + problem + " --seed 9 --threads 3");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("naive mode emits one whole-space parametrization") {
  std::string problem = write_file("sphere4.json", sphere_json(65521));
  std::string result = (scratch_dir() / "sphere4.out.json").string();
  RunResult solve =
      run("solve " + problem + " --naive --seed 2 --out " + result);
  CHECK(solve.code == 0);
  LoadedOutput out = load_output(result);
  REQUIRE(out.naive.has_value());
  CHECK(out.naive->degree() == 14);
  CHECK(out.entries.empty());

  RunResult verify = run("verify " + result + " " + problem);
  CHECK(verify.code == 0);
  CHECK(contains(verify.out, "whole-space parametrization, degree 14"));
}

TEST_CASE("bounds prints the table and the aggregate lines") {
  RunResult r = run("bounds 4 4 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "partition"));
  CHECK(contains(r.out, "1^2 2^1"));
  CHECK(contains(r.out, "22/3"));
  CHECK(contains(r.out, "875/6"));
  CHECK(contains(r.out, "candidate total (ceiling):  80"));
  CHECK(contains(r.out, "isolated total (ceiling):   746"));
  CHECK(contains(r.out, "global candidate bound:     560"));
  CHECK(contains(r.out, "global isolated bound:      7000"));
  CHECK(contains(r.out, "determinantal bound:        864"));
}

TEST_CASE("oracle lists the rational points of a small instance") {
  std::string problem = write_file("sphere11.json", sphere_json(11));
  RunResult r = run("oracle " + problem);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"count\": 12"));
  CHECK(contains(r.out, "[1, 1], [2, 1]"));  // the (1^1 2^1) block list
  CHECK(contains(r.out, "[0, 5], [0, 6], [2, 1], [9, 10]"));
}

TEST_CASE("gen emits a problem file that solve accepts") {
  RunResult gen = run("gen 3 1 2 --seed 4 --prime 101");
  CHECK(gen.code == 0);
  ProblemInstance prob = parse_problem(gen.out);
  CHECK(prob.n() == 3);
  CHECK(prob.s() == 1);
  CHECK(prob.field().p() == 101);

  std::string problem = write_file("gen.json", gen.out);
  std::string result = (scratch_dir() / "gen.out.json").string();
  RunResult solve = run("solve " + problem + " --seed 4 --out " + result);
  CHECK(solve.code == 0);
  RunResult verify = run("verify " + result + " " + problem);
  CHECK(verify.code == 0);
}

TEST_CASE("usage problems exit with the usage code") {
  CHECK(run("bogus").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("solve").code == 1);
  CHECK(run("bounds 4 4").code == 1);
  CHECK(run("solve x --threads 0").code == 1);
}

TEST_CASE("parse problems exit with the parse code") {
  std::string garbage = write_file("garbage.json", "this is not json");
  CHECK(run("solve " + garbage).code == 4);
  std::string empty = write_file("empty.json", "{}");
  CHECK(run("solve " + empty).code == 4);
  // a missing file is a usage error, not a parse error
  CHECK(run(std::string("solve ") + (scratch_dir() / "nope.json").string())
            .code != 0);
}

TEST_CASE("verification failures exit with the verification code") {
  std::string problem = write_file("sphere5.json", sphere_json(65521));
  std::string other = write_file("sphere101.json", sphere_json(101));
  std::string result = (scratch_dir() / "sphere5.out.json").string();
  RunResult solve = run("solve " + problem + " --seed 1 --out " + result);
  REQUIRE(solve.code == 0);

  // result computed over GF(65521) checked against a GF(101) problem
  RunResult verify = run("verify " + result + " " + other);
  CHECK(verify.code == 2);
  CHECK(contains(verify.out, "error:"));
}

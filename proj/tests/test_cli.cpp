#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "foxh/io.hpp"

namespace fs = std::filesystem;
using foxh::Json;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("foxh_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(FOXH_CLI_PATH) + " " + args + " 2>" + err.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err);
  return r;
}

const char* kExpSpec = R"({"varphi":[["1","0"]]})";
const char* kRationalSpec = R"({"psi":[["1","0","1"]]})";

}  // namespace

TEST_CASE("cli check reports the canonical instance") {
  const auto in = write_file("exp.json", kExpSpec);
  const Run r = run("check --in " + in.string());
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["chi_prime"] == "1");
}

TEST_CASE("cli build embeds the report and derivation") {
  const auto in = write_file("rat.json", kRationalSpec);
  const Run r = run("build --in " + in.string());
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == "foxh.params.v1");
  CHECK(j["m"] == 1);
  CHECK(j["upper"][0][0] == "0");
  CHECK(j["ep_report"]["ok"] == true);
  CHECK(j["derivation"][0]["op"] == "build");
}

TEST_CASE("cli verify on 1/(1+t)") {
  const auto in = write_file("rat.json", kRationalSpec);
  const Run r = run("verify --in " + in.string() + " --grid 0.01:100:25:log");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["max_abs_diff"].get<double>() <= 1e-8);
  CHECK(j["positivity_ok"] == true);
  CHECK(j["mellin_roundtrip_max_rel_err"].get<double>() <= 1e-5);
}

TEST_CASE("cli eval writes deterministic CSV") {
  const auto in = write_file("exp.json", kExpSpec);
  const Run a = run("eval --in " + in.string() + " --grid 0.5:2:4:lin");
  const Run b = run("eval --in " + in.string() + " --grid 0.5:2:4:lin");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "t,value,abs_err_est,height_used,panels");
  std::getline(lines, row);
  CHECK(row.rfind("0.5,0.6065306597", 0) == 0);
}

TEST_CASE("cli oracle CSV") {
  const auto in = write_file("phi.json", R"({"phi":[["1","0","2"]]})");
  const Run r = run("oracle --in " + in.string() + " --grid 0.5:1.5:3:lin");
  REQUIRE(r.status == 0);
  CHECK(r.out == "t,value,abs_err_est\n0.5,0.5,0\n1,0,0\n1.5,0,0\n");
}

TEST_CASE("cli exit codes and error JSON") {
  const auto empty_strip =
      write_file("empty.json", R"({"m":1,"n":1,"p":1,"q":1,"upper":[["0","1"]],"lower":[["-2","1"]]})");
  Run r = run("eval --in " + empty_strip.string());
  CHECK(r.status == 2);
  CHECK(Json::parse(r.err)["error"] == "StripEmpty");

  const auto broken = write_file("broken.json", R"({"varphi":[["1"]]})");
  r = run("check --in " + broken.string());
  CHECK(r.status == 1);
  CHECK(Json::parse(r.err)["error"] == "SchemaViolation");

  r = run("check --in " + (scratch_dir() / "missing.json").string());
  CHECK(r.status == 1);

  const auto exp = write_file("exp.json", kExpSpec);
  r = run("eval --in " + exp.string() + " --grid 1:2:3");
  CHECK(r.status == 2);
  CHECK(Json::parse(r.err)["error"] == "InvalidOptions");

  const auto phi = write_file("phi.json", R"({"phi":[["1","0","2"]]})");
  r = run("build --in " + phi.string());
  CHECK(r.status == 2);
  CHECK(Json::parse(r.err)["error"] == "IndexRule");
}

TEST_CASE("cli transform chains derivations") {
  const auto in = write_file("rat.json", kRationalSpec);
  Run r = run("transform --in " + in.string() + " --op laplace --omega 1 --lambda 1");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["n"] == 2);
  CHECK(j["upper"] == Json::parse(R"([["0","1"],["0","1"]])"));
  CHECK(j["derivation"].size() == 2);
  CHECK(j["derivation"][1]["op"] == "laplace");

  const auto step = write_file("step.json", r.out);
  r = run("transform --in " + step.string() + " --op reciprocal");
  REQUIRE(r.status == 0);
  j = Json::parse(r.out);
  CHECK(j["derivation"].size() == 3);
  CHECK(j["m"] == 2);

  r = run("transform --in " + in.string() + " --op laplace --omega -1 --lambda 1");
  CHECK(r.status == 2);
  CHECK(Json::parse(r.err)["error"] == "PreconditionFailed");

  r = run("transform --in " + in.string() + " --op product --with " + in.string() + " --omega 5 --lambda 1");
  CHECK(r.status == 2);
  CHECK(Json::parse(r.err)["error"] == "OmegaOutOfRange");

  r = run("transform --in " + in.string() + " --op product --with " + in.string() + " --omega 1 --lambda 1");
  REQUIRE(r.status == 0);
  CHECK(Json::parse(r.out)["m"] == 2);
}

TEST_CASE("cli reduce recognises special cases") {
  const auto in = write_file("exp.json", kExpSpec);
  const Run r = run("reduce --in " + in.string());
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["wright"]["mu"] == "0");
  CHECK(j["meijer"]["lambda"] == "1");
  CHECK(j["macrobert"].is_null());
}

TEST_CASE("cli corpus is seeded and deterministic") {
  const std::string args = "corpus --seed 9 --count 2 --max-kernels 2 --grid 0.1:10:5:log";
  const Run a = run(args), b = run(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 3);
  CHECK(a.out.find(",ok\n") != std::string::npos);
}

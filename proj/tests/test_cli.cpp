// Exercises the installed command-line surface end to end: exit codes, the
// graph-file round trip, and byte-for-byte deterministic reports.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(DPM_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("verify --all passes and exits 0 on the torus bouquet") {
  const RunResult r = run("verify --all --gen bouquet:1 --weights 2,3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0 failed") != std::string::npos);
}

TEST_CASE("json verification reports are byte-for-byte deterministic") {
  const std::string cmd =
      "verify --all --gen grid:2x2 --random-weights --seed 5 --json";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"summary\"") != std::string::npos);
  CHECK(a.output.find("\"failed\": 0") != std::string::npos);
}

TEST_CASE("gen emits a file that the other commands accept") {
  const auto path = temp_file("dpm_cli_roundtrip.graph");
  const RunResult g =
      run("gen --gen bouquet:2 --random-weights --seed 9 -o " + path.string());
  REQUIRE(g.exit_code == 0);

  const RunResult info = run("info " + path.string());
  CHECK(info.exit_code == 0);
  CHECK(info.output.find("genus: 2") != std::string::npos);

  const RunResult verify = run("verify --all " + path.string());
  CHECK(verify.exit_code == 0);

  // Weight override on a file input.
  const RunResult period = run("period " + path.string() +
                               " --weights 1,1,1,1 --json");
  CHECK(period.exit_code == 0);
  CHECK(period.output.find("\"tree_sum\": \"1\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("period prints the expected matrix for the pinned example") {
  const RunResult r = run("period --gen bouquet:1 --weights 2,3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("OmegaL") != std::string::npos);
  CHECK(r.output.find("wp_potential: 3") != std::string::npos);
}

TEST_CASE("quasitrees lists the single rank-2 set of the torus bouquet") {
  const RunResult r = run("quasitrees --k 2 --gen bouquet:1 --weights 2,3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1 quasi-trees of rank 2") != std::string::npos);
  CHECK(r.output.find("edges {0,1}") != std::string::npos);
}

TEST_CASE("usage and input errors exit with code 2") {
  CHECK(run("period").exit_code == 2);                       // no input
  CHECK(run("period --gen bouquet:0").exit_code == 2);       // bad params
  CHECK(run("verify --gen nosuch:1").exit_code == 2);        // bad family
  CHECK(run("info --gen bouquet:1 --weights 2").exit_code == 2);

  const auto bad = temp_file("dpm_cli_bad.graph");
  std::ofstream(bad.string()) << "vertex 0 0 1\nedge 0 0 1 0\n";
  CHECK(run("info " + bad.string()).exit_code == 2);  // zero weight
  std::filesystem::remove(bad);

  CHECK(run("info /nonexistent/file.graph").exit_code == 2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "hn4walk/experiments.hpp"
#include "hn4walk/walk.hpp"

using namespace hn4walk;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HN4WALK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
    r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_dir(const char* tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   (std::string("hn4walk-cli-") + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Pulls "key=value" tokens out of the run summary line.
std::string extract(const std::string& output, const std::string& key) {
  const auto pos = output.find(key + "=");
  REQUIRE(pos != std::string::npos);
  const auto start = pos + key.size() + 1;
  const auto end = output.find_first_of(" \n", start);
  return output.substr(start, end - start);
}

}  // namespace

TEST_CASE("missing required flag exits 2 with usage text") {
  const CliResult r = run_cli("run --dim 1 --coin grover --marked 32");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("--n") != std::string::npos);
}

TEST_CASE("bad flag values exit 2") {
  CHECK(run_cli("run --dim 3 --n 4 --coin grover --marked 1").exit_code == 2);
  CHECK(run_cli("run --dim 1 --n 6 --coin bogus --marked 1").exit_code == 2);
  CHECK(run_cli("run --dim 1 --n 6 --coin grover --marked 99").exit_code == 2);
  CHECK(run_cli("run --dim 1 --n 6 --coin grover --loop-weight 1/2 --marked 1")
            .exit_code == 2);
  CHECK(run_cli("run --dim 2 --n 3 --coin grover --marked 3,4").exit_code == 2);
}

TEST_CASE("run writes a CSV and its summary line matches the library") {
  const auto dir = temp_dir("run");
  const CliResult r = run_cli(
      "run --dim 1 --n 6 --coin modified-g --loop-weight 2/64 --marked 32 "
      "--steps 300 --out " +
      dir.string());
  REQUIRE(r.exit_code == 0);

  const LatticeSpec ring = LatticeSpec::ring(6);
  const Walk walk(ring, CoinSpec::modified_g(2.0 / 64),
                  MarkedSet::ring_vertices(ring, {32}));
  const CoinSummary expected = summarize(walk.evolve(300));

  CHECK(extract(r.output, "p0") == "0.015625");
  CHECK(std::stod(extract(r.output, "max_prob")) ==
        doctest::Approx(expected.max_prob).epsilon(1e-15));
  CHECK(std::stoi(extract(r.output, "argmax_t")) == expected.argmax_t);
  CHECK(extract(r.output, "classification") ==
        classification_name(expected.classification));

  const auto csv = dir / "run" / "modified-g.csv";
  REQUIRE(std::filesystem::exists(csv));
  std::ifstream in(csv);
  std::string line;
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#' && line[0] != 't') ++rows;
  CHECK(rows == 301);
  std::filesystem::remove_all(dir);
}

TEST_CASE("2D run reports the suppressed pair as FLAT") {
  const auto dir = temp_dir("run2d");
  const CliResult r = run_cli(
      "run --dim 2 --n 5 --coin grover --marked \"(1,1),(2,1)\" --steps 400 "
      "--out " +
      dir.string());
  REQUIRE(r.exit_code == 0);
  CHECK(extract(r.output, "classification") == "FLAT");
  std::filesystem::remove_all(dir);
}

TEST_CASE("reproduce rejects unknown ids") {
  const CliResult r = run_cli("reproduce fig9");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("unknown experiment id") != std::string::npos);
}

TEST_CASE("reproduce fig2 prints the classification table and files") {
  const auto dir = temp_dir("repro");
  const CliResult r =
      run_cli("reproduce fig2-1d-selfloop --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("grover") != std::string::npos);
  CHECK(r.output.find("FLAT") != std::string::npos);
  CHECK(r.output.find("modified-g") != std::string::npos);
  CHECK(r.output.find("GROWS") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "fig2-1d-selfloop" / "grover.csv"));
  CHECK(std::filesystem::exists(dir / "fig2-1d-selfloop" / "skw.csv"));
  CHECK(std::filesystem::exists(dir / "summary.csv"));
  CHECK(std::filesystem::exists(dir / "catalog.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("a horizon too short to grow trips the mismatch exit code") {
  const auto dir = temp_dir("short");
  const CliResult r =
      run_cli("reproduce all --steps 50 --out " + dir.string());
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("classification mismatch") != std::string::npos);
  std::ifstream in(dir / "summary.csv");
  std::string line;
  int rows = -1;  // discount the header
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 28);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify quick passes; an injected shift fault fails with exit 5") {
  const CliResult ok = run_cli("verify quick");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("shift-involution") != std::string::npos);
  CHECK(ok.output.find("FAIL") == std::string::npos);

  const CliResult bad = run_cli("verify quick --inject-shift-fault");
  CHECK(bad.exit_code == 5);
  CHECK(bad.output.find("failed suites:") != std::string::npos);
  CHECK(bad.output.find("shift-involution") != std::string::npos);
}

TEST_CASE("verify full adds the norm-drift suite") {
  const CliResult r = run_cli("verify full");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("norm-drift") != std::string::npos);
}

TEST_CASE("verify rejects unknown levels") {
  CHECK(run_cli("verify bogus").exit_code == 2);
}

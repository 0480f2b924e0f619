#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "slfast/io.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("slfast_cli_" + std::to_string(std::rand()) + "_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(const TempDir& dir, const std::string& args) {
  const std::string cmd = "cd '" + dir.path.string() + "' && '" SLFAST_CLI_PATH "' " + args +
                          " > out.txt 2> err.txt";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("cli solve writes solution and stats") {
  TempDir d;
  REQUIRE(run(d, "solve --problem hjb1 --method fsm --n 101") == 0);
  const auto stats = nlohmann::json::parse(slurp(d.path / "stats.json"));
  CHECK(stats["sweeps"] == 5);
  CHECK(stats["method"] == "fsm");
  const slfast::ValueField f = slfast::read_solution_csv(d.path / "solution.csv");
  CHECK(f.geometry.n == 101);
  CHECK(f.values[50 * 101 + 50] == 0.0);
}

TEST_CASE("cli fim reactivation map") {
  TempDir d;
  REQUIRE(run(d, "solve --problem hjb5 --method fim --n 101 --reactivation react.csv") == 0);
  const auto stats = nlohmann::json::parse(slurp(d.path / "stats.json"));
  std::ifstream in(d.path / "react.csv");
  std::string line;
  std::getline(in, line);
  int max_i = 0;
  int rows = 0;
  while (std::getline(in, line)) {
    max_i = std::max(max_i, std::stoi(line.substr(line.rfind(',') + 1)));
    ++rows;
  }
  CHECK(rows == 101 * 101);
  CHECK(max_i == stats["imax"].get<int>());
  CHECK(max_i > 1);
}

TEST_CASE("cli smallest grid and custom problem file") {
  TempDir d;
  CHECK(run(d, "solve --problem hjb2 --method ufsm34 --n 3") == 0);
  std::ofstream(d.path / "p.txt") << "template = anisotropic\nlambda = 3\nmu = 1\n";
  CHECK(run(d, "solve --problem-file p.txt --method fim --n 21") == 0);
  CHECK(nlohmann::json::parse(slurp(d.path / "stats.json"))["problem"] == "custom");
}

TEST_CASE("cli compare of a method with itself") {
  TempDir d;
  REQUIRE(run(d, "compare --problem hjb3 --methods fsm,fsm --n 41") == 0);
  const auto j = nlohmann::json::parse(slurp(d.path / "compare.json"));
  CHECK(j["pairwise_linf"][0][1] == 0.0);
  CHECK(j["methods"][0]["status"] == "agree");
}

TEST_CASE("cli table") {
  TempDir d;
  REQUIRE(run(d, "table --problems hjb1,hjb3 --sizes 21,41 --jobs 2") == 0);
  const std::string csv = slurp(d.path / "table.csv");
  int lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 5);
  CHECK(csv.find("hjb3,41,") != std::string::npos);
  CHECK(slurp(d.path / "table.txt").find("UFSM3/4") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  TempDir d;
  CHECK(run(d, "") == 1);
  CHECK(run(d, "solve --n 2") == 1);
  CHECK(run(d, "solve --problem hjb9") == 1);
  CHECK(run(d, "solve --method fsm --reactivation r.csv") == 1);
  CHECK(run(d, "compare --methods fsm") == 1);
  CHECK(run(d, "solve --problem hjb5 --n 41 --max-sweeps 3") == 2);
  CHECK(run(d, "--help") == 0);
}

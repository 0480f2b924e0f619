#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "slfast/io.hpp"

using namespace slfast;

TEST_CASE("solution CSV round-trips exactly") {
  const ProblemSpec p = builtin(ProblemId::kHjb3);
  const Grid2D g = make_grid(p, 21);
  ValueField f = solve_fsm(g, p).field;
  f.values[g.linear(0, 0)] = kSentinel;
  f.astar[g.linear(0, 0)] = -1;
  std::stringstream buf;
  write_solution_csv(buf, f);
  const std::string text = buf.str();
  CHECK(text.rfind("x,y,T,astar\n", 0) == 0);
  CHECK(text.find(",inf,-1\n") != std::string::npos);

  const ValueField back = read_solution_csv(buf);
  CHECK(back.values == f.values);
  CHECK(back.astar == f.astar);
  CHECK(same_grid(back.geometry, f.geometry));
  CHECK(diff_fields(back, f).linf == 0.0);
}

TEST_CASE("solution CSV errors") {
  std::stringstream bad_header("a,b,c\n1,2,3\n");
  CHECK_THROWS_AS(read_solution_csv(bad_header), std::runtime_error);
  std::stringstream short_row("x,y,T,astar\n0,0,1\n");
  CHECK_THROWS_AS(read_solution_csv(short_row), std::runtime_error);
  std::stringstream not_square("x,y,T,astar\n0,0,1,0\n1,0,1,0\n");
  CHECK_THROWS_AS(read_solution_csv(not_square), std::runtime_error);
  std::stringstream bad_number("x,y,T,astar\n0,0,abc,0\n");
  CHECK_THROWS_AS(read_solution_csv(bad_number), std::runtime_error);
}

TEST_CASE("stats JSON") {
  SolverStats st;
  st.sweeps = 5;
  st.node_updates = 123;
  st.imax = 2;
  st.wall_seconds = 0.25;
  const auto j = nlohmann::json::parse(stats_json({"hjb1", "fsm", 101, 0.04, 1e-12}, st));
  CHECK(j["problem"] == "hjb1");
  CHECK(j["method"] == "fsm");
  CHECK(j["n"] == 101);
  CHECK(j["dx"] == 0.04);
  CHECK(j["sweeps"] == 5);
  CHECK(j["node_updates"] == 123);
  CHECK(j["imax"] == 2);
  CHECK(j.contains("wall_seconds"));
  CHECK(j.contains("eps"));
}

TEST_CASE("reactivation CSV") {
  std::stringstream out;
  write_reactivation_csv(out, 3, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  std::string line;
  std::getline(out, line);
  CHECK(line == "i,j,I");
  std::getline(out, line);
  CHECK(line == "0,0,0");
  std::getline(out, line);
  CHECK(line == "1,0,1");
  int rows = 2;
  while (std::getline(out, line)) ++rows;
  CHECK(rows == 9);
  CHECK_THROWS_AS(write_reactivation_csv(out, 3, {1, 2}), std::invalid_argument);
}

TEST_CASE("problem files") {
  const ProblemSpec s = parse_problem_text(
      "# steep anisotropy\n"
      "template = anisotropic\n"
      "name = steep\n"
      "lambda = 20\n"
      "mu = -3   # trailing comment\n"
      "xmin = -1\nxmax = 1\nymin = -1\nymax = 1\n"
      "target_x = 0.5\n"
      "controls = 64\n"
      "prune_on_velocity = 1\n");
  CHECK(s.name == "steep");
  CHECK(s.dynamics == DynamicsKind::kAnisotropic);
  CHECK(s.lambda == 20.0);
  CHECK(s.mu == -3.0);
  CHECK(s.target.x == 0.5);
  CHECK(s.target.y == 0.0);
  CHECK(s.n_controls == 64);
  CHECK(s.prune_on_velocity);
  CHECK(s.id == ProblemId::kCustom);

  CHECK_THROWS_AS(parse_problem_text("lambda = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem_text("template = warp\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem_text("template = identity\ncolour = 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem_text("template = identity\nlambda = x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem_text("template = identity\njunk\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem_text("template = identity\ncontrols = 6\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_problem_file("/nonexistent/problem.txt"), std::invalid_argument);
}

// slfast: solve, compare and tabulate minimum-time HJB benchmarks from the command line.
//
// Exit codes: 0 success, 1 usage or input error, 2 solver iteration guard tripped.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slfast/io.hpp"
#include "slfast/problems.hpp"
#include "slfast/report.hpp"
#include "slfast/solvers.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;

struct ProblemArgs {
  std::string problem = "hjb1";
  std::string problem_file;

  slfast::ProblemSpec resolve() const {
    if (!problem_file.empty()) return slfast::load_problem_file(problem_file);
    return slfast::builtin(problem);
  }
};

void add_problem_options(CLI::App* cmd, ProblemArgs& args) {
  auto* builtin = cmd->add_option("--problem", args.problem, "Built-in problem: hjb1..hjb5")
                      ->capture_default_str();
  cmd->add_option("--problem-file", args.problem_file, "Custom problem (key = value file)")
      ->check(CLI::ExistingFile)
      ->excludes(builtin);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct SolveArgs {
  ProblemArgs problem;
  std::string method = "fsm";
  int n = 101;
  double eps = 1e-12;
  int max_sweeps = 10000;
  std::string out = "solution.csv";
  std::string stats = "stats.json";
  std::string reactivation;
};

int cmd_solve(const SolveArgs& a) {
  const slfast::ProblemSpec spec = a.problem.resolve();
  const slfast::Method method = slfast::parse_method(a.method);
  if (!a.reactivation.empty() && method != slfast::Method::kFim) {
    throw std::invalid_argument("--reactivation is only available with --method fim");
  }
  const slfast::Grid2D grid = slfast::make_grid(spec, a.n);
  slfast::SolveOptions opts;
  opts.eps = a.eps;
  opts.max_sweeps = a.max_sweeps;
  const slfast::Solution sol = slfast::solve(method, grid, spec, opts);

  slfast::write_solution_csv(a.out, sol.field);
  const std::string json = slfast::stats_json(
      {spec.name, std::string(slfast::to_string(method)), a.n, grid.dx(), a.eps}, sol.stats);
  write_text(a.stats, json + "\n");
  if (!a.reactivation.empty()) {
    slfast::write_reactivation_csv(a.reactivation, a.n, sol.stats.insertions);
  }
  std::cout << json << '\n';
  return 0;
}

struct CompareArgs {
  ProblemArgs problem;
  std::string methods = "fsm,ufsm34,ufsm14,fim";
  int n = 101;
  double eps = 1e-12;
  double tolerance = slfast::kAgreementTolerance;
  std::string json = "compare.json";
};

int cmd_compare(const CompareArgs& a) {
  const slfast::ProblemSpec spec = a.problem.resolve();
  std::vector<slfast::Method> methods;
  for (const std::string& m : split_list(a.methods)) methods.push_back(slfast::parse_method(m));
  const slfast::CompareReport report =
      slfast::compare_methods(spec, methods, a.n, a.eps, a.tolerance);
  std::cout << slfast::compare_text(report);
  write_text(a.json, slfast::compare_json(report) + "\n");
  return 0;
}

struct TableArgs {
  std::string problems = "hjb1,hjb2,hjb3,hjb4,hjb5";
  std::string sizes = "101,201,401";
  double eps = 1e-12;
  int jobs = 1;
  std::string csv = "table.csv";
  std::string text = "table.txt";
};

int cmd_table(const TableArgs& a) {
  std::vector<slfast::ProblemSpec> problems;
  for (const std::string& p : split_list(a.problems)) problems.push_back(slfast::builtin(p));
  std::vector<int> sizes;
  for (const std::string& s : split_list(a.sizes)) {
    std::size_t used = 0;
    const int n = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad grid size '" + s + "'");
    sizes.push_back(n);
  }
  const auto rows = slfast::run_table(problems, sizes, a.eps, a.jobs);
  const std::string text = slfast::table_text(rows);
  std::cout << text;
  write_text(a.csv, slfast::table_csv(rows));
  write_text(a.text, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-Lagrangian fast sweeping / fast iterative solvers for minimum-time HJB"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve one problem with one method");
  add_problem_options(s, solve.problem);
  s->add_option("--method", solve.method, "fsm | ufsm34 | ufsm14 | fim | reference")
      ->capture_default_str();
  s->add_option("--n", solve.n, "Nodes per side")->check(CLI::Range(3, 1 << 15))->capture_default_str();
  s->add_option("--eps", solve.eps, "Convergence tolerance")->check(CLI::NonNegativeNumber)->capture_default_str();
  s->add_option("--max-sweeps", solve.max_sweeps, "Sweep guard for fsm/ufsm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  s->add_option("--out", solve.out, "Solution CSV")->capture_default_str();
  s->add_option("--stats", solve.stats, "Stats JSON")->capture_default_str();
  s->add_option("--reactivation", solve.reactivation, "FIM insertion-count map CSV");

  CompareArgs compare;
  auto* c = app.add_subcommand("compare", "Diff several methods against the reference solver");
  add_problem_options(c, compare.problem);
  c->add_option("--methods", compare.methods, "Comma-separated methods")->capture_default_str();
  c->add_option("--n", compare.n, "Nodes per side")->check(CLI::Range(3, 1 << 15))->capture_default_str();
  c->add_option("--eps", compare.eps, "Convergence tolerance")->check(CLI::NonNegativeNumber)->capture_default_str();
  c->add_option("--tolerance", compare.tolerance, "Agreement tolerance (L-inf)")->capture_default_str();
  c->add_option("--json", compare.json, "Report JSON")->capture_default_str();

  TableArgs table;
  auto* t = app.add_subcommand("table", "Sweep counts, I_max and timings for the benchmark set");
  t->add_option("--problems", table.problems, "Comma-separated built-in problems")->capture_default_str();
  t->add_option("--sizes", table.sizes, "Comma-separated grid sizes")->capture_default_str();
  t->add_option("--eps", table.eps, "Convergence tolerance")->check(CLI::NonNegativeNumber)->capture_default_str();
  t->add_option("--jobs", table.jobs, "Rows solved concurrently")->check(CLI::PositiveNumber)->capture_default_str();
  t->add_option("--csv", table.csv, "Table CSV")->capture_default_str();
  t->add_option("--text", table.text, "Aligned text table")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*c) return cmd_compare(compare);
    if (*t) return cmd_table(table);
  } catch (const slfast::SolverGuardError& e) {
    std::cerr << "solver guard tripped: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

#pragma once

#include <string>
#include <vector>

#include "slfast/problems.hpp"
#include "slfast/solvers.hpp"

namespace slfast {

/// Default agreement tolerance between two solvers' fields (L∞).
inline constexpr double kAgreementTolerance = 1e-9;

struct MethodComparison {
  Method method = Method::kFsm;
  FieldDiff vs_reference;
  bool agrees = false;
  SolverStats stats;
};

struct CompareReport {
  std::string problem;
  int n = 0;
  double eps = 0.0;
  double tolerance = kAgreementTolerance;
  SolverStats reference_stats;
  std::vector<MethodComparison> rows;
  /// pairwise_linf[a][b]: L∞ distance between rows a and b.
  std::vector<std::vector<double>> pairwise_linf;
};

/// Solves with every listed method and with the reference oracle, then diffs each
/// against the reference. Needs at least two methods.
CompareReport compare_methods(const ProblemSpec& spec, const std::vector<Method>& methods, int n,
                              double eps = 1e-12, double tolerance = kAgreementTolerance);

std::string compare_json(const CompareReport& report);
std::string compare_text(const CompareReport& report);

/// One line of the timing/sweep table: a problem at one grid size.
struct TableRow {
  std::string problem;
  int n = 0;
  double dx = 0.0;
  double fsm_seconds = 0.0;
  int fsm_sweeps = 0;
  double fim_seconds = 0.0;
  int fim_imax = 0;
  double ufsm14_seconds = 0.0;
  int ufsm14_sweeps = 0;
  /// UFSM 1/4 result within kAgreementTolerance of FSM.
  bool ufsm14_agrees = false;
  double ufsm34_seconds = 0.0;
  int ufsm34_sweeps = 0;
};

/// Runs FSM, FIM, UFSM 1/4 and UFSM 3/4 for every (problem, n) pair. Rows come back in
/// problem-major order regardless of `jobs` (number of concurrent rows).
std::vector<TableRow> run_table(const std::vector<ProblemSpec>& problems,
                                const std::vector<int>& sizes, double eps = 1e-12, int jobs = 1);

std::string table_csv(const std::vector<TableRow>& rows);
std::string table_text(const std::vector<TableRow>& rows);

}  // namespace slfast

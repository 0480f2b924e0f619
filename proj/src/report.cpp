#include "slfast/report.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace slfast {

namespace {

nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

TableRow table_row(const ProblemSpec& spec, int n, double eps) {
  const Grid2D grid = make_grid(spec, n);
  SolveOptions opts;
  opts.eps = eps;
  TableRow row;
  row.problem = spec.name;
  row.n = n;
  row.dx = grid.dx();

  const Solution fsm = solve_fsm(grid, spec, opts);
  row.fsm_seconds = fsm.stats.wall_seconds;
  row.fsm_sweeps = fsm.stats.sweeps;

  const Solution fim = solve_fim(grid, spec, opts);
  row.fim_seconds = fim.stats.wall_seconds;
  row.fim_imax = fim.stats.imax;

  const Solution q14 = solve_ufsm(grid, spec, ControlFraction::kOneQuarter, opts);
  row.ufsm14_seconds = q14.stats.wall_seconds;
  row.ufsm14_sweeps = q14.stats.sweeps;
  row.ufsm14_agrees = diff_fields(q14.field, fsm.field).linf <= kAgreementTolerance;

  const Solution q34 = solve_ufsm(grid, spec, ControlFraction::kThreeQuarter, opts);
  row.ufsm34_seconds = q34.stats.wall_seconds;
  row.ufsm34_sweeps = q34.stats.sweeps;
  return row;
}

}  // namespace

CompareReport compare_methods(const ProblemSpec& spec, const std::vector<Method>& methods, int n,
                              double eps, double tolerance) {
  if (methods.size() < 2) throw std::invalid_argument("compare needs at least two methods");
  const Grid2D grid = make_grid(spec, n);
  SolveOptions opts;
  opts.eps = eps;

  CompareReport report;
  report.problem = spec.name;
  report.n = n;
  report.eps = eps;
  report.tolerance = tolerance;
  const Solution reference = solve_reference(grid, spec, opts);
  report.reference_stats = reference.stats;

  std::vector<ValueField> fields;
  for (Method m : methods) {
    Solution s = solve(m, grid, spec, opts);
    MethodComparison row;
    row.method = m;
    row.vs_reference = diff_fields(s.field, reference.field);
    row.agrees = row.vs_reference.linf <= tolerance;
    row.stats = std::move(s.stats);
    row.stats.insertions.clear();
    report.rows.push_back(std::move(row));
    fields.push_back(std::move(s.field));
  }
  const std::size_t k = fields.size();
  report.pairwise_linf.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const double d = diff_fields(fields[a], fields[b]).linf;
      report.pairwise_linf[a][b] = report.pairwise_linf[b][a] = d;
    }
  }
  return report;
}

std::string compare_json(const CompareReport& report) {
  nlohmann::ordered_json j;
  j["problem"] = report.problem;
  j["n"] = report.n;
  j["eps"] = report.eps;
  j["tolerance"] = report.tolerance;
  j["reference_passes"] = report.reference_stats.sweeps;
  auto& rows = j["methods"] = nlohmann::ordered_json::array();
  for (const MethodComparison& r : report.rows) {
    nlohmann::ordered_json row;
    row["method"] = std::string(to_string(r.method));
    row["linf"] = number_or_null(r.vs_reference.linf);
    row["l1_mean"] = number_or_null(r.vs_reference.l1_mean);
    row["argmax"] = {r.vs_reference.argmax.i, r.vs_reference.argmax.j};
    row["status"] = r.agrees ? "agree" : "divergent";
    row["sweeps"] = r.stats.sweeps;
    row["imax"] = r.stats.imax;
    row["wall_seconds"] = r.stats.wall_seconds;
    rows.push_back(std::move(row));
  }
  auto& pw = j["pairwise_linf"] = nlohmann::ordered_json::array();
  for (const auto& line : report.pairwise_linf) {
    auto arr = nlohmann::ordered_json::array();
    for (double v : line) arr.push_back(number_or_null(v));
    pw.push_back(std::move(arr));
  }
  return j.dump(2);
}

std::string compare_text(const CompareReport& report) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s  n=%d  reference passes=%d  tolerance=%.1e\n",
                report.problem.c_str(), report.n, report.reference_stats.sweeps, report.tolerance);
  out << buf;
  std::snprintf(buf, sizeof buf, "%-10s %12s %12s %10s %8s %6s  %s\n", "method", "linf", "l1_mean",
                "argmax", "sweeps", "imax", "status");
  out << buf;
  for (const MethodComparison& r : report.rows) {
    const std::string at =
        std::to_string(r.vs_reference.argmax.i) + "," + std::to_string(r.vs_reference.argmax.j);
    std::snprintf(buf, sizeof buf, "%-10s %12.3e %12.3e %10s %8d %6d  %s\n",
                  std::string(to_string(r.method)).c_str(), r.vs_reference.linf,
                  r.vs_reference.l1_mean, at.c_str(), r.stats.sweeps, r.stats.imax,
                  r.agrees ? "agree" : "DIVERGENT");
    out << buf;
  }
  return out.str();
}

std::vector<TableRow> run_table(const std::vector<ProblemSpec>& problems,
                                const std::vector<int>& sizes, double eps, int jobs) {
  struct Job {
    const ProblemSpec* spec;
    int n;
  };
  std::vector<Job> work;
  for (const ProblemSpec& p : problems) {
    for (int n : sizes) work.push_back({&p, n});
  }
  std::vector<TableRow> rows(work.size());
  if (jobs <= 1 || work.size() <= 1) {
    for (std::size_t k = 0; k < work.size(); ++k) rows[k] = table_row(*work[k].spec, work[k].n, eps);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(work.size());
  auto worker = [&] {
    for (std::size_t k = next++; k < work.size(); k = next++) {
      try {
        rows[k] = table_row(*work[k].spec, work[k].n, eps);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(jobs), work.size());
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "problem,n,dx,fsm_seconds,fsm_sweeps,fim_seconds,fim_imax,ufsm14_seconds,"
         "ufsm14_sweeps,ufsm14_agrees,ufsm34_seconds,ufsm34_sweeps\n";
  char buf[256];
  for (const TableRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.17g,%.6f,%d,%.6f,%d,%.6f,%d,%d,%.6f,%d\n",
                  r.problem.c_str(), r.n, r.dx, r.fsm_seconds, r.fsm_sweeps, r.fim_seconds,
                  r.fim_imax, r.ufsm14_seconds, r.ufsm14_sweeps, r.ufsm14_agrees ? 1 : 0,
                  r.ufsm34_seconds, r.ufsm34_sweeps);
    out << buf;
  }
  return out.str();
}

std::string table_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-8s %5s %8s | %15s | %14s | %15s | %15s\n", "Equation", "Grid",
                "dx", "FSM (sweeps)", "FIM [Imax]", "UFSM1/4", "UFSM3/4");
  out << buf << std::string(std::char_traits<char>::length(buf) - 1, '-') << '\n';
  for (const TableRow& r : rows) {
    char fsm[32], fim[32], q14[32], q34[32];
    std::snprintf(fsm, sizeof fsm, "%.2f (%d)", r.fsm_seconds, r.fsm_sweeps);
    std::snprintf(fim, sizeof fim, "%.2f [%d]", r.fim_seconds, r.fim_imax);
    if (r.ufsm14_agrees) {
      std::snprintf(q14, sizeof q14, "%.2f (%d)", r.ufsm14_seconds, r.ufsm14_sweeps);
    } else {
      std::snprintf(q14, sizeof q14, "wrong (%d)", r.ufsm14_sweeps);
    }
    std::snprintf(q34, sizeof q34, "%.2f (%d)", r.ufsm34_seconds, r.ufsm34_sweeps);
    std::snprintf(buf, sizeof buf, "%-8s %5d %8g | %15s | %14s | %15s | %15s\n", r.problem.c_str(),
                  r.n, r.dx, fsm, fim, q14, q34);
    out << buf;
  }
  return out.str();
}

}  // namespace slfast

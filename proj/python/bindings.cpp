#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "slfast/io.hpp"
#include "slfast/report.hpp"
#include "slfast/solvers.hpp"

namespace py = pybind11;
using namespace slfast;

namespace {

py::dict stats_dict(const SolverStats& s) {
  py::dict d;
  d["sweeps"] = s.sweeps;
  d["node_updates"] = s.node_updates;
  d["imax"] = s.imax;
  d["total_insertions"] = s.total_insertions;
  d["wall_seconds"] = s.wall_seconds;
  return d;
}

// Values come back as an (n, n) array indexed [j, i]; the sentinel becomes inf.
py::dict solution_dict(const Solution& sol, int n, bool with_insertions) {
  py::array_t<double> values({n, n});
  py::array_t<int> astar({n, n});
  auto v = values.mutable_unchecked<2>();
  auto a = astar.mutable_unchecked<2>();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * n + i;
      const double t = sol.field.values[k];
      v(j, i) = t >= kSentinel ? std::numeric_limits<double>::infinity() : t;
      a(j, i) = sol.field.astar[k];
    }
  }
  py::dict d;
  d["values"] = values;
  d["astar"] = astar;
  d["xmin"] = sol.field.geometry.xmin;
  d["ymin"] = sol.field.geometry.ymin;
  d["dx"] = sol.field.geometry.dx;
  d["stats"] = stats_dict(sol.stats);
  if (with_insertions) {
    py::array_t<int> ins({n, n});
    auto m = ins.mutable_unchecked<2>();
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) m(j, i) = sol.stats.insertions[static_cast<std::size_t>(j) * n + i];
    }
    d["insertions"] = ins;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semi-Lagrangian sweeping and fast iterative solvers for minimum-time HJB problems";

  py::class_<ProblemSpec>(m, "ProblemSpec")
      .def_readwrite("name", &ProblemSpec::name)
      .def_readwrite("lam", &ProblemSpec::lambda)
      .def_readwrite("mu", &ProblemSpec::mu)
      .def_readwrite("n_controls", &ProblemSpec::n_controls)
      .def_readwrite("prune_on_velocity", &ProblemSpec::prune_on_velocity)
      .def_property_readonly("dynamics",
                             [](const ProblemSpec& p) { return std::string(to_string(p.dynamics)); })
      .def_property_readonly("domain",
                             [](const ProblemSpec& p) {
                               return py::make_tuple(p.xmin, p.xmax, p.ymin, p.ymax);
                             })
      .def_property(
          "target", [](const ProblemSpec& p) { return py::make_tuple(p.target.x, p.target.y); },
          [](ProblemSpec& p, std::pair<double, double> t) { p.target = {t.first, t.second}; })
      .def("__repr__", [](const ProblemSpec& p) {
        return "<ProblemSpec " + p.name + " (" + std::string(to_string(p.dynamics)) + ")>";
      });

  py::register_exception<SolverGuardError>(m, "SolverGuardError", PyExc_RuntimeError);

  m.def("builtin", py::overload_cast<std::string_view>(&builtin), py::arg("name"),
        "Built-in problem hjb1..hjb5");
  m.def("parse_problem", &parse_problem_text, py::arg("text"),
        "Custom problem from key = value text");
  m.def("load_problem", &load_problem_file, py::arg("path"));
  m.def("methods", [] {
    return std::vector<std::string>{"fsm", "ufsm34", "ufsm14", "fim", "reference"};
  });

  m.def(
      "solve",
      [](const ProblemSpec& spec, const std::string& method, int n, double eps, int max_sweeps) {
        const Method mth = parse_method(method);
        const Grid2D grid = make_grid(spec, n);
        SolveOptions opts;
        opts.eps = eps;
        opts.max_sweeps = max_sweeps;
        Solution sol;
        {
          py::gil_scoped_release release;
          sol = solve(mth, grid, spec, opts);
        }
        return solution_dict(sol, n, mth == Method::kFim);
      },
      py::arg("spec"), py::arg("method") = "fsm", py::arg("n") = 101, py::arg("eps") = 1e-12,
      py::arg("max_sweeps") = 10000);

  m.def(
      "compare",
      [](const ProblemSpec& spec, const std::vector<std::string>& methods, int n, double eps,
         double tolerance) {
        std::vector<Method> ms;
        for (const auto& s : methods) ms.push_back(parse_method(s));
        CompareReport r;
        {
          py::gil_scoped_release release;
          r = compare_methods(spec, ms, n, eps, tolerance);
        }
        return compare_json(r);
      },
      py::arg("spec"), py::arg("methods") = std::vector<std::string>{"fsm", "ufsm34", "ufsm14", "fim"},
      py::arg("n") = 101, py::arg("eps") = 1e-12, py::arg("tolerance") = kAgreementTolerance,
      "Returns the comparison report as a JSON string");

  m.def(
      "table",
      [](const std::vector<std::string>& problems, const std::vector<int>& sizes, double eps,
         int jobs) {
        std::vector<ProblemSpec> specs;
        for (const auto& p : problems) specs.push_back(builtin(p));
        std::vector<TableRow> rows;
        {
          py::gil_scoped_release release;
          rows = run_table(specs, sizes, eps, jobs);
        }
        return table_csv(rows);
      },
      py::arg("problems"), py::arg("sizes"), py::arg("eps") = 1e-12, py::arg("jobs") = 1,
      "Returns the table as CSV text");
}

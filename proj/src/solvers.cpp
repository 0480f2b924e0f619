#include "slfast/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace slfast {

namespace {

constexpr std::array<Offset, 8> kNeighbors8 = {Offset{-1, -1}, Offset{0, -1}, Offset{1, -1},
                                               Offset{-1, 0},  Offset{1, 0},  Offset{-1, 1},
                                               Offset{0, 1},   Offset{1, 1}};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct SweepFilter {
  SweepOrdering ordering;
  ControlFraction fraction;
  bool on_velocity;

  bool operator()(const Control& c, Vec2 velocity) const {
    return allowed_in_sweep(ordering, fraction, on_velocity ? velocity : c.a);
  }
};

Solution run_sweeping(const Grid2D& grid, const ProblemSpec& spec, ControlFraction fraction,
                      const SolveOptions& opts) {
  if (!(opts.eps >= 0.0)) throw std::invalid_argument("eps must be non-negative");
  const Stopwatch clock;
  const std::vector<Control> controls = unit_controls(spec.n_controls);
  Solution out{init_field(grid), {}};
  for (int sweep = 0;; ++sweep) {
    if (sweep >= opts.max_sweeps) {
      throw SolverGuardError("sweeping did not converge within " +
                             std::to_string(opts.max_sweeps) + " sweeps");
    }
    const SweepOrdering ordering = kSweepCycle[sweep % kSweepCycle.size()];
    const SweepResult r =
        gauss_seidel_sweep(grid, spec, controls, out.field, ordering, fraction, opts.observer);
    ++out.stats.sweeps;
    out.stats.node_updates += r.updates;
    if (r.max_change <= opts.eps) break;
  }
  out.stats.wall_seconds = clock.seconds();
  return out;
}

}  // namespace

GridGeometry geometry_of(const Grid2D& grid) {
  return {grid.xmin(), grid.ymin(), grid.dx(), grid.n()};
}

bool same_grid(const GridGeometry& a, const GridGeometry& b) {
  if (a.n != b.n) return false;
  const double scale = std::max(a.dx, b.dx) * std::max(a.n, 1);
  const double tol = 1e-12 * scale;
  return std::abs(a.xmin - b.xmin) <= tol && std::abs(a.ymin - b.ymin) <= tol &&
         std::abs(a.dx - b.dx) <= 1e-12 * std::max(a.dx, b.dx);
}

ValueField init_field(const Grid2D& grid) {
  ValueField field{geometry_of(grid), std::vector<double>(grid.size(), kSentinel),
                   std::vector<int>(grid.size(), -1)};
  for (std::size_t t : grid.target_nodes()) field.values[t] = 0.0;
  return field;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::kFsm: return "fsm";
    case Method::kUfsm34: return "ufsm34";
    case Method::kUfsm14: return "ufsm14";
    case Method::kFim: return "fim";
    case Method::kReference: return "reference";
  }
  return "fsm";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::kFsm, Method::kUfsm34, Method::kUfsm14, Method::kFim,
                   Method::kReference}) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

SweepResult gauss_seidel_sweep(const Grid2D& grid, const ProblemSpec& spec,
                               std::span<const Control> controls, ValueField& field,
                               SweepOrdering ordering, ControlFraction fraction,
                               const UpdateObserver& observer) {
  const int n = grid.n();
  const SweepFilter filter{ordering, fraction, spec.prune_on_velocity};
  SweepResult result;
  for (int jj = 0; jj < n; ++jj) {
    const int j = ordering.sy > 0 ? jj : n - 1 - jj;
    for (int ii = 0; ii < n; ++ii) {
      const int i = ordering.sx > 0 ? ii : n - 1 - ii;
      const std::size_t k = grid.linear(i, j);
      if (grid.is_target(k)) continue;
      const UpdateResult u = sl_update(grid, spec, controls, field.values, {i, j}, filter);
      ++result.updates;
      const double old = field.values[k];
      if (u.feasible && u.value < old) {
        field.values[k] = u.value;
        field.astar[k] = u.astar;
        result.max_change = std::max(result.max_change, old - u.value);
        if (observer) observer(k, old, u.value);
      }
    }
  }
  return result;
}

Solution solve_fsm(const Grid2D& grid, const ProblemSpec& spec, const SolveOptions& opts) {
  return run_sweeping(grid, spec, ControlFraction::kFull, opts);
}

Solution solve_ufsm(const Grid2D& grid, const ProblemSpec& spec, ControlFraction fraction,
                    const SolveOptions& opts) {
  return run_sweeping(grid, spec, fraction, opts);
}

Solution solve_fim(const Grid2D& grid, const ProblemSpec& spec, const SolveOptions& opts) {
  if (!(opts.eps >= 0.0)) throw std::invalid_argument("eps must be non-negative");
  const Stopwatch clock;
  const std::vector<Control> controls = unit_controls(spec.n_controls);
  const double eps = opts.eps;
  const int n = grid.n();

  Solution out{init_field(grid), {}};
  ValueField& field = out.field;
  SolverStats& stats = out.stats;
  stats.insertions.assign(grid.size(), 0);
  std::vector<unsigned char> in_list(grid.size(), 0);
  std::vector<std::size_t> active;

  const std::uint64_t guard =
      static_cast<std::uint64_t>(opts.max_insertions_per_node) * grid.size();
  auto insert = [&](std::size_t k) {
    in_list[k] = 1;
    active.push_back(k);
    ++stats.insertions[k];
    if (++stats.total_insertions > guard) {
      throw SolverGuardError("FIM exceeded " + std::to_string(guard) + " list insertions");
    }
  };
  auto assign = [&](std::size_t k, const UpdateResult& u) {
    const double old = field.values[k];
    field.values[k] = u.value;
    field.astar[k] = u.astar;
    if (opts.observer) opts.observer(k, old, u.value);
  };

  for (std::size_t t : grid.target_nodes()) {
    const NodeIndex c = grid.node(t);
    for (const Offset& o : kNeighbors8) {
      const int i = c.i + o.di;
      const int j = c.j + o.dj;
      if (!grid.contains(i, j)) continue;
      const std::size_t k = grid.linear(i, j);
      if (grid.is_target(k) || in_list[k]) continue;
      insert(k);
    }
  }

  std::vector<std::size_t> snapshot;
  std::vector<std::size_t> survivors;
  while (!active.empty()) {
    ++stats.sweeps;
    snapshot.swap(active);
    active.clear();
    survivors.clear();
    bool progress = false;
    for (std::size_t k : snapshot) {
      const NodeIndex x = grid.node(k);
      const UpdateResult p = sl_update(grid, spec, controls, field.values, x);
      ++stats.node_updates;
      const double old = field.values[k];
      if (p.feasible && p.value < old) {
        assign(k, p);
        progress = true;
      }
      // A node still at the sentinel has no information yet, so it cannot have converged.
      if (std::abs(old - field.values[k]) > eps || field.values[k] >= kSentinel) {
        survivors.push_back(k);
        continue;
      }
      in_list[k] = 0;
      progress = true;
      for (const Offset& o : kNeighbors8) {
        const int i = x.i + o.di;
        const int j = x.j + o.dj;
        if (i < 0 || j < 0 || i >= n || j >= n) continue;
        const std::size_t nb = grid.linear(i, j);
        if (in_list[nb] || grid.is_target(nb)) continue;
        const UpdateResult q = sl_update(grid, spec, controls, field.values, {i, j});
        ++stats.node_updates;
        if (q.feasible && q.value < field.values[nb] - eps) {
          assign(nb, q);
          insert(nb);
        }
      }
    }
    // Survivors were listed before anything appended during this pass.
    survivors.insert(survivors.end(), active.begin(), active.end());
    active.swap(survivors);
    if (!progress) {
      // Only nodes no characteristic reaches are left; they keep the sentinel.
      for (std::size_t k : active) in_list[k] = 0;
      active.clear();
    }
  }

  stats.imax = stats.insertions.empty()
                   ? 0
                   : *std::max_element(stats.insertions.begin(), stats.insertions.end());
  stats.wall_seconds = clock.seconds();
  return out;
}

Solution solve_reference(const Grid2D& grid, const ProblemSpec& spec, const SolveOptions& opts) {
  const Stopwatch clock;
  const std::vector<Control> controls = unit_controls(spec.n_controls);
  const int n = grid.n();
  Solution out{init_field(grid), {}};
  std::vector<double> previous = out.field.values;
  for (;;) {
    if (out.stats.sweeps >= opts.max_reference_passes) {
      throw SolverGuardError("reference iteration did not converge within " +
                             std::to_string(opts.max_reference_passes) + " passes");
    }
    ++out.stats.sweeps;
    bool changed = false;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const std::size_t k = grid.linear(i, j);
        if (grid.is_target(k)) continue;
        const UpdateResult u = sl_update(grid, spec, controls, previous, {i, j});
        ++out.stats.node_updates;
        const double old = out.field.values[k];
        if (u.feasible && u.value < old) {
          out.field.values[k] = u.value;
          out.field.astar[k] = u.astar;
          changed = true;
          if (opts.observer) opts.observer(k, old, u.value);
        }
      }
    }
    if (!changed) break;
    previous = out.field.values;
  }
  out.stats.wall_seconds = clock.seconds();
  return out;
}

Solution solve(Method method, const Grid2D& grid, const ProblemSpec& spec,
               const SolveOptions& opts) {
  switch (method) {
    case Method::kFsm: return solve_fsm(grid, spec, opts);
    case Method::kUfsm34: return solve_ufsm(grid, spec, ControlFraction::kThreeQuarter, opts);
    case Method::kUfsm14: return solve_ufsm(grid, spec, ControlFraction::kOneQuarter, opts);
    case Method::kFim: return solve_fim(grid, spec, opts);
    case Method::kReference: return solve_reference(grid, spec, opts);
  }
  throw std::invalid_argument("unknown method");
}

FieldDiff diff_fields(const ValueField& a, const ValueField& b) {
  if (!same_grid(a.geometry, b.geometry) || a.values.size() != b.values.size() ||
      a.values.size() != static_cast<std::size_t>(a.geometry.n) * a.geometry.n) {
    throw std::invalid_argument("cannot compare fields on different grids");
  }
  FieldDiff d;
  double sum = 0.0;
  const int n = a.geometry.n;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    const bool ka = a.values[k] < kSentinel;
    const bool kb = b.values[k] < kSentinel;
    if (!ka && !kb) continue;
    const double e = (ka && kb) ? std::abs(a.values[k] - b.values[k])
                                : std::numeric_limits<double>::infinity();
    ++d.compared;
    sum += e;
    if (e > d.linf || d.compared == 1) {
      d.linf = e;
      d.argmax = {static_cast<int>(k % n), static_cast<int>(k / n)};
    }
  }
  d.l1_mean = d.compared ? sum / static_cast<double>(d.compared) : 0.0;
  return d;
}

}  // namespace slfast

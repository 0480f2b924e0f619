#pragma once

// Randomized invariant checks shared by the unit tests and the acceptance runner.
// Each suite returns how many cases ran and the first failure, if any.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "slfast/local_update.hpp"
#include "slfast/problems.hpp"
#include "slfast/solvers.hpp"

namespace slfast::props {

struct SuiteResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

/// Small random problem: any dynamics family, random parameters and target.
struct RandomProblem {
  ProblemSpec spec;
  int n = 9;
};

inline RandomProblem random_problem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind_dist(0, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RandomProblem rp;
  ProblemSpec& s = rp.spec;
  s.id = ProblemId::kCustom;
  s.name = "random";
  s.dynamics = static_cast<DynamicsKind>(kind_dist(rng));
  const double half = 0.5 + 2.0 * unit(rng);
  s.xmin = s.ymin = -half;
  s.xmax = s.ymax = half;
  s.target = {(unit(rng) - 0.5) * 2.0 * half, (unit(rng) - 0.5) * 2.0 * half};
  s.lambda = -10.0 + 20.0 * unit(rng);
  s.mu = -10.0 + 20.0 * unit(rng);
  s.sinusoid = {0.3 * unit(rng), 0.5 + 2.5 * unit(rng), 0.25 + 0.75 * unit(rng),
                std::numbers::pi * unit(rng)};
  s.speed_low = 0.5 + 4.5 * unit(rng);
  s.speed_high = 0.5 + 4.5 * unit(rng);
  s.speed_threshold = (unit(rng) - 0.5) * 2.0 * half;
  const int controls[] = {4, 8, 16, 32};
  s.n_controls = controls[std::uniform_int_distribution<int>(0, 3)(rng)];
  rp.n = 5 + 2 * std::uniform_int_distribution<int>(0, 7)(rng);
  return rp;
}

inline Vec2 random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double t = angle(rng);
  return {std::cos(t), std::sin(t)};
}

/// Barycentric weights lie in [0, 1] and sum to 1 for random unit directions.
inline SuiteResult barycentric_weights(std::uint64_t seed, int cases = 1000000) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  for (int c = 0; c < cases; ++c) {
    ++r.cases;
    const Vec2 d = random_unit(rng);
    const Triangle t = triangle_weights(d);
    const double sum = t.weights[0] + t.weights[1] + t.weights[2];
    const bool in_range = std::all_of(t.weights.begin(), t.weights.end(),
                                      [](double w) { return w >= 0.0 && w <= 1.0; });
    if (!in_range || std::abs(sum - 1.0) > 1e-12) {
      r.fail("direction (" + std::to_string(d.x) + ", " + std::to_string(d.y) + ")");
    }
  }
  return r;
}

/// Every solver only ever lowers node values, and never touches targets.
inline SuiteResult monotone_values(std::uint64_t seed, int cases = 1000) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  const Method methods[] = {Method::kFsm, Method::kUfsm34, Method::kUfsm14, Method::kFim,
                            Method::kReference};
  for (int c = 0; c < cases; ++c) {
    const RandomProblem rp = random_problem(rng);
    const Grid2D grid = make_grid(rp.spec, rp.n);
    const Method m = methods[c % 5];
    ++r.cases;
    bool bad = false;
    SolveOptions opts;
    opts.observer = [&](std::size_t k, double old_value, double new_value) {
      if (new_value > old_value || grid.is_target(k) || new_value < 0.0) bad = true;
    };
    const Solution s = solve(m, grid, rp.spec, opts);
    for (std::size_t t : grid.target_nodes()) bad = bad || s.field.values[t] != 0.0;
    if (bad) r.fail("case " + std::to_string(c) + " method " + std::string(to_string(m)));
  }
  return r;
}

/// The 3/4 filter removes each control in at most one ordering, and each control
/// strictly inside a quadrant in exactly one; the 1/4 filter keeps each strictly
/// interior control in exactly one ordering and covers every control.
inline SuiteResult control_filter_partition(std::uint64_t seed, int cases = 1000) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  const int counts[] = {4, 8, 12, 16, 32, 64};
  for (int c = 0; c < cases; ++c) {
    ++r.cases;
    // Alternate between the discrete control sets and random directions.
    std::vector<Vec2> dirs;
    if (c % 2 == 0) {
      for (const Control& k : unit_controls(counts[(c / 2) % 6])) dirs.push_back(k.a);
    } else {
      dirs.push_back(random_unit(rng));
    }
    for (const Vec2& d : dirs) {
      int removed34 = 0;
      int kept14 = 0;
      for (const SweepOrdering& o : kSweepCycle) {
        removed34 += allowed_in_sweep(o, ControlFraction::kThreeQuarter, d) ? 0 : 1;
        kept14 += allowed_in_sweep(o, ControlFraction::kOneQuarter, d) ? 1 : 0;
        if (!allowed_in_sweep(o, ControlFraction::kFull, d)) r.fail("full filter dropped a control");
      }
      const bool interior = d.x != 0.0 && d.y != 0.0;
      if (removed34 > 1 || (interior && removed34 != 1) || kept14 < 1 ||
          (interior && kept14 != 1)) {
        r.fail("direction (" + std::to_string(d.x) + ", " + std::to_string(d.y) + ")");
      }
    }
  }
  return r;
}

/// FIM ends with an empty list: every node's insertion count is consistent with the
/// total, and the final field is a fixed point of the update.
inline SuiteResult fim_bookkeeping(std::uint64_t seed, int cases = 1000) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  for (int c = 0; c < cases; ++c) {
    const RandomProblem rp = random_problem(rng);
    const Grid2D grid = make_grid(rp.spec, rp.n);
    ++r.cases;
    const Solution s = solve_fim(grid, rp.spec);
    std::uint64_t sum = 0;
    for (int v : s.stats.insertions) sum += static_cast<std::uint64_t>(v);
    const int imax = *std::max_element(s.stats.insertions.begin(), s.stats.insertions.end());
    bool bad = sum != s.stats.total_insertions || imax != s.stats.imax;
    for (std::size_t t : grid.target_nodes()) bad = bad || s.stats.insertions[t] != 0;
    // With the list empty no node can still improve.
    const std::vector<Control> controls = unit_controls(rp.spec.n_controls);
    for (std::size_t k = 0; k < grid.size() && !bad; ++k) {
      if (grid.is_target(k)) continue;
      const UpdateResult u = sl_update(grid, rp.spec, controls, s.field.values, grid.node(k));
      if (u.feasible && u.value < s.field.values[k] - 1e-12) bad = true;
    }
    if (bad) r.fail("case " + std::to_string(c));
  }
  return r;
}

/// One more Jacobi pass over the reference solution changes nothing.
inline SuiteResult reference_idempotence(std::uint64_t seed, int cases = 1000) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  for (int c = 0; c < cases; ++c) {
    const RandomProblem rp = random_problem(rng);
    const Grid2D grid = make_grid(rp.spec, rp.n);
    ++r.cases;
    const Solution s = solve_reference(grid, rp.spec);
    const std::vector<Control> controls = unit_controls(rp.spec.n_controls);
    bool bad = false;
    for (std::size_t k = 0; k < grid.size() && !bad; ++k) {
      if (grid.is_target(k)) continue;
      const UpdateResult u = sl_update(grid, rp.spec, controls, s.field.values, grid.node(k));
      if (u.feasible && u.value < s.field.values[k]) bad = true;
    }
    if (bad) r.fail("case " + std::to_string(c));
  }
  return r;
}

}  // namespace slfast::props

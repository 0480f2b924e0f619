#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slfast/grid.hpp"
#include "slfast/local_update.hpp"
#include "slfast/problems.hpp"

namespace slfast {

/// Geometry a field was computed on; enough to place every node.
struct GridGeometry {
  double xmin = 0.0;
  double ymin = 0.0;
  double dx = 0.0;
  int n = 0;

  friend bool operator==(const GridGeometry&, const GridGeometry&) = default;
};

GridGeometry geometry_of(const Grid2D& grid);

/// Same node count and coordinates up to rounding (fields read back from CSV
/// rebuild dx from printed coordinates).
bool same_grid(const GridGeometry& a, const GridGeometry& b);

/// Per-node approximate minimum time plus the index of the minimizing control
/// (-1 where unknown and on targets). Row-major, j outer.
struct ValueField {
  GridGeometry geometry;
  std::vector<double> values;
  std::vector<int> astar;
};

/// 0 on targets, kSentinel elsewhere, astar = -1 everywhere.
ValueField init_field(const Grid2D& grid);

/// Traversal direction of one sweep: sx = +1 is W→E, sy = +1 is S→N.
struct SweepOrdering {
  int sx = 1;
  int sy = 1;

  friend bool operator==(SweepOrdering, SweepOrdering) = default;
};

inline constexpr std::array<SweepOrdering, 4> kSweepCycle = {
    SweepOrdering{1, 1}, SweepOrdering{1, -1}, SweepOrdering{-1, -1}, SweepOrdering{-1, 1}};

enum class ControlFraction { kFull, kThreeQuarter, kOneQuarter };

/// UFSM control pruning. kThreeQuarter drops the open downwind quadrant,
/// kOneQuarter keeps only the closed upwind quadrant. Only signs of `direction` matter.
constexpr bool allowed_in_sweep(SweepOrdering o, ControlFraction fraction, Vec2 direction) {
  const double px = direction.x * o.sx;
  const double py = direction.y * o.sy;
  switch (fraction) {
    case ControlFraction::kFull:
      return true;
    case ControlFraction::kThreeQuarter:
      return !(px > 0.0 && py > 0.0);
    case ControlFraction::kOneQuarter:
      return px <= 0.0 && py <= 0.0;
  }
  return true;
}

enum class Method { kFsm, kUfsm34, kUfsm14, kFim, kReference };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

struct SolverStats {
  /// Grid passes: Gauss-Seidel sweeps (including the final check sweep), FIM list
  /// passes, or Jacobi passes for the reference solver.
  int sweeps = 0;
  std::uint64_t node_updates = 0;
  /// FIM only: number of times each node entered the active list.
  std::vector<int> insertions;
  int imax = 0;
  std::uint64_t total_insertions = 0;
  double wall_seconds = 0.0;
};

struct Solution {
  ValueField field;
  SolverStats stats;
};

/// Called on every value assignment with (linear node, old value, new value).
using UpdateObserver = std::function<void(std::size_t, double, double)>;

struct SolveOptions {
  double eps = 1e-12;
  int max_sweeps = 10000;
  /// FIM aborts once total insertions exceed this multiple of the node count.
  int max_insertions_per_node = 1000;
  int max_reference_passes = 1000000;
  UpdateObserver observer;
};

/// Thrown when a solver exceeds its iteration guard.
class SolverGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepResult {
  double max_change = 0.0;
  std::uint64_t updates = 0;
};

/// One in-place Gauss-Seidel pass over all non-target nodes, rows in sy order and
/// columns in sx order. Values only decrease: new = min(old, candidate).
SweepResult gauss_seidel_sweep(const Grid2D& grid, const ProblemSpec& spec,
                               std::span<const Control> controls, ValueField& field,
                               SweepOrdering ordering, ControlFraction fraction,
                               const UpdateObserver& observer = {});

Solution solve_fsm(const Grid2D& grid, const ProblemSpec& spec, const SolveOptions& opts = {});

Solution solve_ufsm(const Grid2D& grid, const ProblemSpec& spec, ControlFraction fraction,
                    const SolveOptions& opts = {});

/// Fast Iterative Method with per-node insertion counting.
Solution solve_fim(const Grid2D& grid, const ProblemSpec& spec, const SolveOptions& opts = {});

/// Jacobi fixed-point iteration with the full control set until nothing changes.
/// Independent of sweep order and list management; used as the oracle.
Solution solve_reference(const Grid2D& grid, const ProblemSpec& spec,
                         const SolveOptions& opts = {});

Solution solve(Method method, const Grid2D& grid, const ProblemSpec& spec,
               const SolveOptions& opts = {});

struct FieldDiff {
  double linf = 0.0;
  double l1_mean = 0.0;
  NodeIndex argmax;
  std::size_t compared = 0;
};

/// Max and mean absolute difference over nodes where at least one field is known.
/// A node known in only one field counts as an infinite difference.
/// Throws std::invalid_argument when the fields live on different grids.
FieldDiff diff_fields(const ValueField& a, const ValueField& b);

}  // namespace slfast

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "slfast/problems.hpp"
#include "slfast/solvers.hpp"

namespace slfast {

/// Solution CSV: header `x,y,T,astar`, rows j-major then i, 17 significant digits,
/// sentinel written as `inf`, unknown control as -1.
void write_solution_csv(std::ostream& out, const ValueField& field);
void write_solution_csv(const std::filesystem::path& path, const ValueField& field);

/// Inverse of write_solution_csv. Values and controls come back bit-exact; the grid
/// geometry is rebuilt from the first and last coordinates.
/// Throws std::runtime_error on malformed input.
ValueField read_solution_csv(std::istream& in);
ValueField read_solution_csv(const std::filesystem::path& path);

/// Dense `i,j,I` triples of FIM list insertions, same row order as the solution CSV.
void write_reactivation_csv(std::ostream& out, int n, const std::vector<int>& insertions);
void write_reactivation_csv(const std::filesystem::path& path, int n,
                            const std::vector<int>& insertions);

struct RunInfo {
  std::string problem;
  std::string method;
  int n = 0;
  double dx = 0.0;
  double eps = 0.0;
};

/// Keys: problem, method, n, dx, eps, sweeps, node_updates, imax, wall_seconds.
std::string stats_json(const RunInfo& info, const SolverStats& stats);

/// Flat `key = value` problem description; `#` starts a comment.
///
/// Recognized keys: template (identity | two_speed | anisotropic | layered |
/// scaled_anisotropic), name, xmin, xmax, ymin, ymax, target_x, target_y, lambda, mu,
/// c1..c4, lower_f1, lower_f2, upper_f1, upper_f2, speed_low, speed_high,
/// speed_threshold, controls, prune_on_velocity (0/1).
/// Throws std::invalid_argument for unknown keys, bad numbers or an invalid result.
ProblemSpec parse_problem_text(std::string_view text);
ProblemSpec load_problem_file(const std::filesystem::path& path);

}  // namespace slfast

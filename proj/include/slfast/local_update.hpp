#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>

#include "slfast/grid.hpp"
#include "slfast/problems.hpp"

namespace slfast {

/// Stand-in for +∞ in value fields. Any interpolation touching it yields it back.
inline constexpr double kSentinel = 1e30;

/// Velocities at or below this magnitude make a control unusable.
inline constexpr double kMinSpeed = 1e-14;

struct FootPoint {
  Vec2 foot;
  double tau = 0.0;
};

/// One explicit Euler step of the characteristic ODE with frozen velocity, stopped at
/// distance dx: foot = node + dx·f/|f|, tau = dx/|f|. Empty when |f| <= min_speed.
std::optional<FootPoint> foot_point(double dx, Vec2 node, Vec2 velocity,
                                    double min_speed = kMinSpeed);

struct Offset {
  int di = 0;
  int dj = 0;
};

/// Interpolation triangle around a node for a given direction: the two axis neighbors
/// and the diagonal neighbor of the direction's quadrant, with barycentric weights of
/// the point at unit distance along the direction.
struct Triangle {
  std::array<Offset, 3> offsets;
  std::array<double, 3> weights;
};

namespace detail {

inline Triangle triangle_for_unit(Vec2 d) {
  const int sx = d.x < 0.0 ? -1 : 1;
  const int sy = d.y < 0.0 ? -1 : 1;
  const double u = std::abs(d.x);
  const double v = std::abs(d.y);
  double w_diag = u + v - 1.0;
  // u² + v² = 1 gives u + v >= 1 exactly; only rounding can push it below.
  if (w_diag < 0.0) w_diag = 0.0;
  return {{Offset{sx, 0}, Offset{sx, sy}, Offset{0, sy}}, {1.0 - v, w_diag, 1.0 - u}};
}

}  // namespace detail

/// Throws std::invalid_argument unless |direction| = 1 within 1e-9.
Triangle triangle_weights(Vec2 direction);

/// Linear interpolation at node + dx·direction from the triangle's vertex values.
/// Zero-weight vertices are never read. Empty when a positive-weight vertex is off-grid.
/// Returns kSentinel if any positive-weight vertex still holds the sentinel.
std::optional<double> interpolate(const Grid2D& grid, std::span<const double> values,
                                  NodeIndex node, Vec2 direction);

struct UpdateResult {
  double value = kSentinel;
  int astar = -1;
  Vec2 foot;
  double tau = 0.0;
  bool feasible = false;
};

/// Accepts every control.
struct AllControls {
  constexpr bool operator()(const Control&, Vec2) const { return true; }
};

/// Semi-Lagrangian update at a non-target node:
///   min over allowed, usable controls of  T(foot_a) + tau_a.
/// The node's own value is never read. Ties go to the lowest control index.
/// `allowed(control, velocity)` filters the control set.
template <class Allowed>
UpdateResult sl_update(const Grid2D& grid, const ProblemSpec& spec,
                       std::span<const Control> controls, std::span<const double> values,
                       NodeIndex node, Allowed&& allowed) {
  const std::size_t self = grid.linear(node.i, node.j);
  if (grid.is_target(self)) {
    throw std::invalid_argument("sl_update called on a target node");
  }
  const double dx = grid.dx();
  const Vec2 x = grid.position_unchecked(node.i, node.j);
  const LocalDynamics dyn = local_dynamics(spec, x.x, x.y);
  const int n = grid.n();

  UpdateResult best;
  for (const Control& c : controls) {
    const Vec2 f = dyn.velocity(c.a);
    if (!allowed(c, f)) continue;
    const double speed = std::sqrt(f.x * f.x + f.y * f.y);
    if (!(speed > kMinSpeed)) continue;
    const Vec2 dir{f.x / speed, f.y / speed};
    const Triangle tri = detail::triangle_for_unit(dir);

    double interp = 0.0;
    bool usable = true;
    bool unknown = false;
    for (int k = 0; k < 3; ++k) {
      const double w = tri.weights[k];
      if (w == 0.0) continue;
      const int ii = node.i + tri.offsets[k].di;
      const int jj = node.j + tri.offsets[k].dj;
      if (ii < 0 || jj < 0 || ii >= n || jj >= n) {
        usable = false;
        break;
      }
      const double t = values[static_cast<std::size_t>(jj) * n + static_cast<std::size_t>(ii)];
      if (t >= kSentinel) {
        unknown = true;
      } else {
        interp += w * t;
      }
    }
    if (!usable) continue;

    const double tau = dx / speed;
    const double candidate = unknown ? kSentinel : interp + tau;
    if (!best.feasible || candidate < best.value) {
      best.feasible = true;
      best.value = candidate;
      best.astar = c.index;
      best.tau = tau;
      best.foot = {x.x + dx * dir.x, x.y + dx * dir.y};
    }
  }
  if (best.feasible && best.value >= kSentinel) {
    best.value = kSentinel;
    best.astar = -1;
  }
  return best;
}

inline UpdateResult sl_update(const Grid2D& grid, const ProblemSpec& spec,
                              std::span<const Control> controls, std::span<const double> values,
                              NodeIndex node) {
  return sl_update(grid, spec, controls, values, node, AllControls{});
}

}  // namespace slfast

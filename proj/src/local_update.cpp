#include "slfast/local_update.hpp"

#include <cmath>
#include <stdexcept>

namespace slfast {

std::optional<FootPoint> foot_point(double dx, Vec2 node, Vec2 velocity, double min_speed) {
  const double speed = std::sqrt(velocity.x * velocity.x + velocity.y * velocity.y);
  if (!(speed > min_speed)) return std::nullopt;
  const double step = dx / speed;
  return FootPoint{{node.x + step * velocity.x, node.y + step * velocity.y}, step};
}

Triangle triangle_weights(Vec2 direction) {
  const double norm = std::sqrt(direction.x * direction.x + direction.y * direction.y);
  if (!(std::abs(norm - 1.0) <= 1e-9)) {
    throw std::invalid_argument("triangle_weights needs a unit direction");
  }
  return detail::triangle_for_unit(direction);
}

std::optional<double> interpolate(const Grid2D& grid, std::span<const double> values,
                                  NodeIndex node, Vec2 direction) {
  const Triangle tri = triangle_weights(direction);
  double sum = 0.0;
  bool unknown = false;
  for (int k = 0; k < 3; ++k) {
    const double w = tri.weights[k];
    if (w == 0.0) continue;
    const int ii = node.i + tri.offsets[k].di;
    const int jj = node.j + tri.offsets[k].dj;
    if (!grid.contains(ii, jj)) return std::nullopt;
    const double t = values[grid.linear(ii, jj)];
    if (t >= kSentinel) {
      unknown = true;
    } else {
      sum += w * t;
    }
  }
  return unknown ? kSentinel : sum;
}

}  // namespace slfast

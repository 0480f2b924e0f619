#include "slfast/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace slfast {

namespace {

int nearest_axis_index(double coord, double lo, double dx, int n) {
  // ceil(t - 1/2) picks the lower node when t sits exactly halfway.
  const double t = (coord - lo) / dx;
  const int k = static_cast<int>(std::ceil(t - 0.5));
  return std::clamp(k, 0, n - 1);
}

}  // namespace

Grid2D::Grid2D(double xmin, double xmax, double ymin, double ymax, int n,
               std::span<const Vec2> target_points)
    : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax), n_(n) {
  if (n < 3) {
    throw std::invalid_argument("grid needs at least 3 nodes per side, got " + std::to_string(n));
  }
  if (!(xmax > xmin) || !(ymax > ymin)) {
    throw std::invalid_argument("grid bounds must satisfy max > min");
  }
  const double wx = xmax - xmin;
  const double wy = ymax - ymin;
  if (std::abs(wx - wy) > 1e-12 * std::max(wx, wy)) {
    throw std::invalid_argument("grid domain must be square");
  }
  dx_ = wx / (n - 1);
  if (target_points.empty()) {
    throw std::invalid_argument("at least one target point is required");
  }

  target_mask_.assign(size(), 0);
  for (const Vec2& p : target_points) {
    const NodeIndex k = nearest_node(p.x, p.y);
    const std::size_t lin = linear(k.i, k.j);
    if (!target_mask_[lin]) {
      target_mask_[lin] = 1;
      targets_.push_back(lin);
    }
  }
  std::sort(targets_.begin(), targets_.end());
}

Vec2 Grid2D::position(int i, int j) const {
  if (!contains(i, j)) {
    throw std::out_of_range("node (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside grid of size " + std::to_string(n_));
  }
  return position_unchecked(i, j);
}

NodeIndex Grid2D::nearest_node(double x, double y) const {
  if (!(x >= xmin_ && x <= xmax_ && y >= ymin_ && y <= ymax_)) {
    throw std::out_of_range("point (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") outside grid domain");
  }
  return {nearest_axis_index(x, xmin_, dx_, n_), nearest_axis_index(y, ymin_, dx_, n_)};
}

Grid2D build_grid(double xmin, double xmax, double ymin, double ymax, int n,
                  std::span<const Vec2> target_points) {
  return Grid2D(xmin, xmax, ymin, ymax, n, target_points);
}

}  // namespace slfast

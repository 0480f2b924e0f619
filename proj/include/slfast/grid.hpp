#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace slfast {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Integer node coordinates on the structured grid.
struct NodeIndex {
  int i = 0;
  int j = 0;

  friend bool operator==(NodeIndex, NodeIndex) = default;
};

/// Uniform node-centered grid over a square domain, with a set of target nodes.
///
/// Nodes are numbered row-major with j as the outer index: linear(i, j) = j * n + i.
/// The grid is immutable after construction.
class Grid2D {
 public:
  Grid2D(double xmin, double xmax, double ymin, double ymax, int n,
         std::span<const Vec2> target_points);

  double xmin() const { return xmin_; }
  double xmax() const { return xmax_; }
  double ymin() const { return ymin_; }
  double ymax() const { return ymax_; }
  int n() const { return n_; }
  double dx() const { return dx_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

  /// Linear indices of the target nodes, sorted and unique.
  const std::vector<std::size_t>& target_nodes() const { return targets_; }
  bool is_target(std::size_t linear) const { return target_mask_[linear] != 0; }

  bool contains(int i, int j) const { return i >= 0 && j >= 0 && i < n_ && j < n_; }
  std::size_t linear(int i, int j) const {
    return static_cast<std::size_t>(j) * n_ + static_cast<std::size_t>(i);
  }
  NodeIndex node(std::size_t linear) const {
    return {static_cast<int>(linear % n_), static_cast<int>(linear / n_)};
  }

  /// Physical coordinates of node (i, j). Throws std::out_of_range for invalid indices.
  Vec2 position(int i, int j) const;

  /// Unchecked variant for inner loops.
  Vec2 position_unchecked(int i, int j) const { return {xmin_ + i * dx_, ymin_ + j * dx_}; }

  /// Node closest to (x, y); ties resolve toward the smaller index on each axis.
  /// Throws std::out_of_range when the point lies outside the domain.
  NodeIndex nearest_node(double x, double y) const;

 private:
  double xmin_;
  double xmax_;
  double ymin_;
  double ymax_;
  int n_;
  double dx_;
  std::vector<std::size_t> targets_;
  std::vector<unsigned char> target_mask_;
};

Grid2D build_grid(double xmin, double xmax, double ymin, double ymax, int n,
                  std::span<const Vec2> target_points);

}  // namespace slfast

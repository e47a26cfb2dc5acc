#pragma once

#include <Eigen/Core>

#include <array>
#include <memory>
#include <vector>

namespace vekua {

/// Uniform lattice discretization of a box in R^n with tensor trapezoid
/// quadrature weights, boundary masks and outward unit normals.
/// Immutable after construction; shared between fields via shared_ptr.
class GridDomain {
public:
  using Index = Eigen::Index;

  static std::shared_ptr<const GridDomain> uniform(
      int n, const std::vector<std::array<double, 2>>& box, int points_per_axis);

  /// Cube [low, high]^n.
  static std::shared_ptr<const GridDomain> cube(int n, double low, double high,
                                                int points_per_axis);

  int dimension() const { return n_; }
  int points_per_axis() const { return m_; }
  Index point_count() const { return point_count_; }
  const std::vector<std::array<double, 2>>& box() const { return box_; }

  double spacing(int axis) const { return spacing_[axis]; }
  double max_spacing() const;
  double min_side() const;
  double diameter() const { return diameter_; }
  double volume() const { return volume_; }

  /// Lattice coordinates of point p, as a row of the N x n coordinate matrix.
  Eigen::VectorXd point(Index p) const { return coords_.row(p); }
  const Eigen::MatrixXd& points() const { return coords_; }

  /// Per-axis lattice index of point p.
  int axis_index(Index p, int axis) const { return lattice_(p, axis); }

  /// Distance to the boundary in lattice layers (0 on the boundary).
  int layer(Index p) const { return layer_[p]; }
  bool is_boundary(Index p) const { return layer_[p] == 0; }
  bool is_interior(Index p) const { return layer_[p] > 0; }

  /// Outward unit normal at a boundary point. Edges and corners take the
  /// normal of the lowest-numbered axis that sits on a face.
  Eigen::VectorXd normal(Index p) const;

  const Eigen::VectorXd& weights() const { return weights_; }
  double weight(Index p) const { return weights_[p]; }

  /// Lattice layers covered by a physical margin of `fraction * min_side`,
  /// at least one layer. Residual norms restricted to this interior region
  /// converge at the stencil order; the outermost layers do not.
  int margin_layers(double fraction) const;

  Index flat_index(const std::vector<int>& lattice) const;

private:
  GridDomain() = default;

  int n_ = 0;
  int m_ = 0;
  Index point_count_ = 0;
  std::vector<std::array<double, 2>> box_;
  std::vector<double> spacing_;
  double diameter_ = 0.0;
  double volume_ = 0.0;
  Eigen::MatrixXd coords_;                  // N x n
  Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic> lattice_;  // N x n
  Eigen::VectorXi layer_;
  Eigen::VectorXd weights_;
};

bool same_grid(const GridDomain& a, const GridDomain& b);

}  // namespace vekua

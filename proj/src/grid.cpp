#include "vekua/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vekua {

std::shared_ptr<const GridDomain> GridDomain::uniform(
    int n, const std::vector<std::array<double, 2>>& box, int points_per_axis) {
  if (n < 1) throw std::invalid_argument("GridDomain: dimension must be >= 1");
  if (static_cast<int>(box.size()) != n)
    throw std::invalid_argument("GridDomain: box size does not match dimension");
  if (points_per_axis < 3)
    throw std::invalid_argument("GridDomain: need at least 3 points per axis");
  for (const auto& side : box)
    if (!(side[1] > side[0]))
      throw std::invalid_argument("GridDomain: box sides must have positive length");

  auto grid = std::shared_ptr<GridDomain>(new GridDomain());
  grid->n_ = n;
  grid->m_ = points_per_axis;
  grid->box_ = box;

  Index count = 1;
  for (int i = 0; i < n; ++i) count *= points_per_axis;
  grid->point_count_ = count;

  grid->spacing_.resize(n);
  double diam2 = 0.0, vol = 1.0;
  for (int i = 0; i < n; ++i) {
    const double len = box[i][1] - box[i][0];
    grid->spacing_[i] = len / (points_per_axis - 1);
    diam2 += len * len;
    vol *= len;
  }
  grid->diameter_ = std::sqrt(diam2);
  grid->volume_ = vol;

  grid->coords_.resize(count, n);
  grid->lattice_.resize(count, n);
  grid->layer_.resize(count);
  grid->weights_.resize(count);

  const int m = points_per_axis;
  std::vector<int> idx(n, 0);
  for (Index p = 0; p < count; ++p) {
    int lay = m;  // plenty
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      grid->lattice_(p, i) = idx[i];
      grid->coords_(p, i) = box[i][0] + idx[i] * grid->spacing_[i];
      lay = std::min(lay, std::min(idx[i], m - 1 - idx[i]));
      double wi = grid->spacing_[i];
      if (idx[i] == 0 || idx[i] == m - 1) wi *= 0.5;
      w *= wi;
    }
    grid->layer_[p] = lay;
    grid->weights_[p] = w;
    for (int i = n - 1; i >= 0; --i) {
      if (++idx[i] < m) break;
      idx[i] = 0;
    }
  }
  return grid;
}

std::shared_ptr<const GridDomain> GridDomain::cube(int n, double low, double high,
                                                   int points_per_axis) {
  std::vector<std::array<double, 2>> box(n, {low, high});
  return uniform(n, box, points_per_axis);
}

double GridDomain::max_spacing() const {
  return *std::max_element(spacing_.begin(), spacing_.end());
}

double GridDomain::min_side() const {
  double s = box_[0][1] - box_[0][0];
  for (const auto& side : box_) s = std::min(s, side[1] - side[0]);
  return s;
}

Eigen::VectorXd GridDomain::normal(Index p) const {
  if (!is_boundary(p))
    throw std::invalid_argument("GridDomain::normal: point is not on the boundary");
  Eigen::VectorXd eta = Eigen::VectorXd::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (lattice_(p, i) == 0) {
      eta[i] = -1.0;
      return eta;
    }
    if (lattice_(p, i) == m_ - 1) {
      eta[i] = 1.0;
      return eta;
    }
  }
  return eta;  // unreachable
}

int GridDomain::margin_layers(double fraction) const {
  if (fraction <= 0.0) return 0;
  const double distance = fraction * min_side();
  int layers = 1;
  for (int i = 0; i < n_; ++i)
    layers = std::max(layers, static_cast<int>(std::ceil(distance / spacing_[i])));
  // keep a nonempty interior
  return std::min(layers, (m_ - 1) / 2 - 1 > 0 ? (m_ - 1) / 2 - 1 : 1);
}

GridDomain::Index GridDomain::flat_index(const std::vector<int>& lattice) const {
  if (static_cast<int>(lattice.size()) != n_)
    throw std::invalid_argument("GridDomain::flat_index: wrong arity");
  Index p = 0;
  for (int i = 0; i < n_; ++i) {
    if (lattice[i] < 0 || lattice[i] >= m_)
      throw std::invalid_argument("GridDomain::flat_index: index out of range");
    p = p * m_ + lattice[i];
  }
  return p;
}

bool same_grid(const GridDomain& a, const GridDomain& b) {
  return &a == &b ||
         (a.dimension() == b.dimension() && a.points_per_axis() == b.points_per_axis() &&
          a.box() == b.box());
}

}  // namespace vekua

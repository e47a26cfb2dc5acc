#include "vekua/test_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vekua {

namespace {

using Index = Field::Index;

void zero_boundary(Field& f) {
  for (Index p = 0; p < f.grid().point_count(); ++p)
    if (f.grid().is_boundary(p))
      for (int b = 0; b < f.blade_count(); ++b) f.coeff(p, b) = 0.0;
}

/// Interior points ordered by distance from the box center (ties by index),
/// so the first hat is the centered one.
std::vector<Index> centered_interior_order(const GridDomain& g) {
  Eigen::VectorXd center(g.dimension());
  for (int i = 0; i < g.dimension(); ++i)
    center[i] = 0.5 * (g.box()[i][0] + g.box()[i][1]);
  std::vector<Index> interior;
  for (Index p = 0; p < g.point_count(); ++p)
    if (g.is_interior(p)) interior.push_back(p);
  std::stable_sort(interior.begin(), interior.end(), [&](Index a, Index b) {
    return (g.point(a) - center).squaredNorm() < (g.point(b) - center).squaredNorm();
  });
  return interior;
}

Field hat_field(std::shared_ptr<const GridDomain> grid, Index center, int radius_cells,
                unsigned blade) {
  const GridDomain& g = *grid;
  Field out(grid);
  for (Index p = 0; p < g.point_count(); ++p) {
    double value = 1.0;
    for (int axis = 0; axis < g.dimension(); ++axis) {
      const int d = std::abs(g.axis_index(p, axis) - g.axis_index(center, axis));
      value *= std::max(0.0, 1.0 - static_cast<double>(d) / radius_cells);
    }
    out.coeff(p, blade) = value;
  }
  zero_boundary(out);
  return out;
}

/// Monomial exponent tuples over n variables ordered by total degree.
std::vector<std::vector<int>> graded_exponents(int n, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> stack(n, 0);
  auto emit = [&](auto&& self, int axis, int remaining) -> void {
    if (axis == n) {
      out.push_back(stack);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      stack[axis] = e;
      self(self, axis + 1, remaining - e);
    }
    stack[axis] = 0;
  };
  std::vector<std::vector<int>> graded;
  for (int d = 0; d <= max_total; ++d) {
    out.clear();
    emit(emit, 0, d);
    for (auto& e : out)
      if (std::accumulate(e.begin(), e.end(), 0) == d) graded.push_back(e);
  }
  return graded;
}

Field bubble_field(std::shared_ptr<const GridDomain> grid, const std::vector<int>& exp,
                   unsigned blade) {
  const GridDomain& g = *grid;
  Field out(grid);
  for (Index p = 0; p < g.point_count(); ++p) {
    const Eigen::VectorXd x = g.point(p);
    double value = 1.0;
    for (int axis = 0; axis < g.dimension(); ++axis) {
      const double lo = g.box()[axis][0], hi = g.box()[axis][1];
      const double len = hi - lo;
      value *= 4.0 * (x[axis] - lo) * (hi - x[axis]) / (len * len);
      for (int k = 0; k < exp[axis]; ++k) value *= (x[axis] - lo) / len;
    }
    out.coeff(p, blade) = value;
  }
  zero_boundary(out);
  return out;
}

}  // namespace

double bump_profile(double t_squared) {
  if (t_squared >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - t_squared));
}

Field sample_bump(std::shared_ptr<const GridDomain> grid, const Eigen::VectorXd& center,
                  double radius, unsigned blade) {
  const GridDomain& g = *grid;
  Field out(grid);
  for (Index p = 0; p < g.point_count(); ++p) {
    const double t2 = (g.point(p) - center).squaredNorm() / (radius * radius);
    out.coeff(p, blade) = bump_profile(t2);
  }
  zero_boundary(out);
  return out;
}

TestFunctionSystem test_function_basis(std::shared_ptr<const GridDomain> grid,
                                       int count, const std::vector<unsigned>& blades,
                                       TestProfile profile, int hat_radius_cells) {
  if (count < 1) throw std::invalid_argument("test_function_basis: count >= 1");
  if (blades.empty()) throw std::invalid_argument("test_function_basis: no blades");
  for (unsigned b : blades)
    if (b >= (1u << grid->dimension()))
      throw std::invalid_argument("test_function_basis: blade out of range");

  TestFunctionSystem out;
  switch (profile) {
    case TestProfile::hat: {
      const std::vector<Index> centers = centered_interior_order(*grid);
      const long capacity = static_cast<long>(centers.size()) * blades.size();
      if (count > capacity)
        throw std::invalid_argument("test_function_basis: count exceeds " +
                                    std::to_string(capacity) + " available hats");
      for (int k = 0; k < count; ++k)
        out.members.push_back(hat_field(grid, centers[k / blades.size()],
                                        hat_radius_cells, blades[k % blades.size()]));
      break;
    }
    case TestProfile::bubble: {
      const auto exps = graded_exponents(grid->dimension(), 8);
      const long capacity = static_cast<long>(exps.size()) * blades.size();
      if (count > capacity)
        throw std::invalid_argument("test_function_basis: count exceeds " +
                                    std::to_string(capacity) + " bubble modulations");
      for (int k = 0; k < count; ++k)
        out.members.push_back(
            bubble_field(grid, exps[k / blades.size()], blades[k % blades.size()]));
      break;
    }
    case TestProfile::smooth_bump: {
      const std::vector<Index> centers = centered_interior_order(*grid);
      const long capacity = static_cast<long>(centers.size()) * blades.size();
      if (count > capacity)
        throw std::invalid_argument("test_function_basis: count exceeds capacity");
      for (int k = 0; k < count; ++k) {
        const Index c = centers[k / blades.size()];
        double radius = 1e30;
        for (int axis = 0; axis < grid->dimension(); ++axis) {
          const double lo = grid->box()[axis][0], hi = grid->box()[axis][1];
          const double xc = grid->point(c)[axis];
          radius = std::min({radius, xc - lo, hi - xc});
        }
        out.members.push_back(
            sample_bump(grid, grid->point(c), radius, blades[k % blades.size()]));
      }
      break;
    }
  }
  return out;
}

}  // namespace vekua

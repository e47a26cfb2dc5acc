#pragma once

#include "vekua/field.hpp"

#include <vector>

namespace vekua {

/// Profile of the zero-trace test functions. All profiles vanish exactly on
/// every boundary point (boundary samples are zeroed after evaluation).
enum class TestProfile {
  hat,         ///< tensor tents on interior lattice points
  bubble,      ///< global polynomial prod (x_i-lo)(hi-x_i), monomial-modulated
  smooth_bump  ///< compactly supported C-infinity bumps
};

/// Discrete stand-in for the zero-trace Sobolev space: `count` fields that
/// vanish on the boundary, cycling the given blades. Throws when count
/// exceeds what the profile family provides.
struct TestFunctionSystem {
  std::vector<Field> members;

  int size() const { return static_cast<int>(members.size()); }
};

TestFunctionSystem test_function_basis(std::shared_ptr<const GridDomain> grid,
                                       int count, const std::vector<unsigned>& blades,
                                       TestProfile profile = TestProfile::hat,
                                       int hat_radius_cells = 1);

/// C-infinity bump exp(1 - 1/(1 - t^2)) of the scaled radius, zero outside.
double bump_profile(double t_squared);

/// A single smooth bump field on blade 0, centered at `center` with the given
/// radius; used by convergence studies that need one fixed function across
/// grids.
Field sample_bump(std::shared_ptr<const GridDomain> grid, const Eigen::VectorXd& center,
                  double radius, unsigned blade = 0);

}  // namespace vekua

#pragma once

#include "vekua/field.hpp"

namespace vekua {

/// Second-order partial derivative along one axis, applied to every blade
/// coefficient: centered in the interior, one-sided three-point stencils on
/// the boundary faces. Requires at least 3 points per axis.
Field partial_derivative(const Field& u, int axis);

/// Moisil-Teodorescu operator D w = sum_i e_i d_i w (left multiplication).
Field dirac_apply(const Field& w);

/// Right-acting Dirac: w D = sum_i (d_i w) e_i.
Field dirac_right_apply(const Field& w);

/// Componentwise Laplacian, second-order stencils per axis. One-sided
/// four-point second-derivative stencils on the boundary (needs m >= 4;
/// falls back to the three-point first-order form at m = 3).
Field laplacian(const Field& u);

/// Gradient of the blade-0 coefficient as a grade-1 field.
Field gradient_of_scalar(const Field& u);

/// Divergence of the grade-1 part, as a scalar (blade-0) field.
Field divergence_of_vector(const Field& u);

}  // namespace vekua

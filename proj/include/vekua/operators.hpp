#pragma once

#include "vekua/diffops.hpp"
#include "vekua/field.hpp"

#include <Eigen/Dense>

#include <random>
#include <string>

namespace vekua {

/// Surface area of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int n);

/// Cauchy kernel E(x) = -x / (sigma_n |x|^n) as a grade-1 multivector.
/// Throws on |x| = 0.
Multivector cauchy_kernel(const Eigen::VectorXd& x);

/// int_box E(y - x) dy, evaluated from closed-form face integrals of the
/// fundamental solution (available for n = 2 and n = 3).
Eigen::VectorXd cauchy_kernel_box_moment(const Eigen::VectorXd& x,
                                         const std::vector<std::array<double, 2>>& box);

bool has_analytic_box_moment(int n);

/// Teodorescu transform on the lattice:
///   T[w](x) = -sum_{y != x} wt(y) E(y-x) (w(y) - w(x)) - A(x) w(x),
/// where A is the box moment above. The singular cell contributes zero.
/// For dimensions without an analytic moment the plain punctured sum
/// -sum_{y != x} wt(y) E(y-x) w(y) is used.
Field teodorescu_apply(const Field& w);

/// An R-linear map on flattened fields, stored dense. Desk scale only;
/// construction refuses sizes beyond `max_dense_dimension`.
struct RealLinearOperator {
  std::shared_ptr<const GridDomain> grid;
  std::string label;
  Eigen::MatrixXd matrix;

  Field apply(const Field& w) const;
  Eigen::Index size() const { return matrix.rows(); }

  static Eigen::Index max_dense_dimension();
};

RealLinearOperator identity_operator(std::shared_ptr<const GridDomain> grid);
RealLinearOperator assemble_dirac(std::shared_ptr<const GridDomain> grid);
RealLinearOperator assemble_teodorescu(std::shared_ptr<const GridDomain> grid);
RealLinearOperator assemble_conjugation(std::shared_ptr<const GridDomain> grid);
/// Pointwise left multiplication w(x) -> a(x) w(x).
RealLinearOperator assemble_left_mult(const Field& a);
/// Pointwise right multiplication w(x) -> w(x) a(x).
RealLinearOperator assemble_right_mult(const Field& a);

RealLinearOperator compose(const RealLinearOperator& a, const RealLinearOperator& b);
RealLinearOperator add(const RealLinearOperator& a, const RealLinearOperator& b);
RealLinearOperator subtract(const RealLinearOperator& a, const RealLinearOperator& b);
RealLinearOperator scale(const RealLinearOperator& a, double s);

/// Adjoint under the quadrature scalar product: A* = W^{-1} A^T W with W the
/// diagonal of point weights (each blade carries the weight of its point).
RealLinearOperator adjoint(const RealLinearOperator& a);

/// Largest singular value of A as a map of the weighted L2 space, estimated
/// by power iteration on the symmetrized operator.
double operator_norm_estimate(const RealLinearOperator& a, int iterations,
                              std::mt19937_64& rng);

/// Condition number estimate sigma_max(A) * sigma_max(A^{-1}) using an LU
/// factorization for the inverse applications.
double condition_estimate(const RealLinearOperator& a, int iterations,
                          std::mt19937_64& rng);

/// Dense dump, one matrix row per line.
void write_matrix_csv(const RealLinearOperator& a, const std::string& path);
/// Raw little-endian doubles, row-major, preceded by two int64 dimensions.
void write_matrix_binary(const RealLinearOperator& a, const std::string& path);

}  // namespace vekua

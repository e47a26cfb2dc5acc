#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vekua/operators.hpp"
#include "vekua/problem.hpp"
#include "vekua/sampling.hpp"

#include <random>

using namespace vekua;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("unit sphere areas") {
  CHECK(unit_sphere_area(2) == doctest::Approx(2 * kPi).epsilon(1e-12));
  CHECK(unit_sphere_area(3) == doctest::Approx(4 * kPi).epsilon(1e-12));
}

TEST_CASE("cauchy kernel values and oddness") {
  Eigen::VectorXd x(3);
  x << 1, 0, 0;
  const Multivector e = cauchy_kernel(x);
  CHECK(e[0b001] == doctest::Approx(-1.0 / (4 * kPi)).epsilon(1e-12));
  CHECK(e[0] == 0.0);
  CHECK(e[0b010] == 0.0);

  Eigen::VectorXd y(2);
  y << 0, 2;
  const Multivector e2 = cauchy_kernel(y);
  CHECK(e2[0b10] == doctest::Approx(-1.0 / (4 * kPi)).epsilon(1e-12));

  std::mt19937_64 rng(1);
  std::normal_distribution<double> gauss;
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXd z(2);
    z << gauss(rng), gauss(rng);
    if (z.norm() < 1e-8) continue;
    CHECK((cauchy_kernel(z) + cauchy_kernel((-z).eval())).norm() < 1e-14);
  }

  Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
  CHECK_THROWS_AS(cauchy_kernel(zero), std::domain_error);
}

TEST_CASE("box moment matches dense quadrature away from the boundary") {
  // oracle: plain punctured lattice sum on a fine grid
  for (int n : {2, 3}) {
    auto fine = GridDomain::cube(n, 0.0, 0.5, n == 2 ? 81 : 21);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = 0.21 + 0.04 * i;
    Eigen::VectorXd quad = Eigen::VectorXd::Zero(n);
    for (GridDomain::Index p = 0; p < fine->point_count(); ++p) {
      const Eigen::VectorXd d = fine->point(p) - x;
      const double r = d.norm();
      if (r < 1e-12) continue;
      quad -= fine->weight(p) / (unit_sphere_area(n) * std::pow(r, n)) * d;
    }
    const Eigen::VectorXd analytic = cauchy_kernel_box_moment(x, fine->box());
    CHECK((analytic - quad).norm() < (n == 2 ? 2e-3 : 2e-2));
  }
}

TEST_CASE("teodorescu basics") {
  auto grid = GridDomain::cube(2, 0.0, 0.5, 9);
  const Field zero(grid);
  CHECK(norm0(teodorescu_apply(zero)) == 0.0);

  // T[1] is minus the box moment, exactly, under the subtracted rule
  const Field ones = sample_scalar([](const Eigen::VectorXd&) { return 1.0; }, grid);
  const Field t1 = teodorescu_apply(ones);
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p) {
    const Eigen::VectorXd a = cauchy_kernel_box_moment(grid->point(p), grid->box());
    CHECK(t1.coeff(p, 0b01) == doctest::Approx(-a[0]).epsilon(1e-12));
    CHECK(t1.coeff(p, 0b10) == doctest::Approx(-a[1]).epsilon(1e-12));
  }
  // and D T[1] = 1 holds at stencil accuracy in the interior
  const Field dt1 = dirac_apply(t1);
  const int layers = grid->margin_layers(0.1);
  CHECK(interior_relative(dt1 - ones, ones, layers) < 2e-2);
}

TEST_CASE("D T = I at interior points with decreasing residual") {
  std::mt19937_64 rng(23);
  const RandomSmoothField wf(2, rng);
  std::vector<double> hs, rs;
  for (int m : {9, 17}) {
    auto grid = GridDomain::cube(2, 0.0, 0.5, m);
    const Field w = wf.sample(grid);
    const Field r = dirac_apply(teodorescu_apply(w)) - w;
    const int layers = grid->margin_layers(0.1);
    hs.push_back(grid->max_spacing());
    rs.push_back(interior_norm0(r, layers) / interior_norm0(w, layers));
  }
  CHECK(rs[1] < rs[0]);
  CHECK(rs[1] < 1e-2);
}

TEST_CASE("D squared is minus the laplacian on smooth scalars") {
  auto grid = GridDomain::cube(2, 0.0, 0.5, 17);
  std::mt19937_64 rng(29);
  const Field h = RandomSmoothField(2, rng).sample(grid).component(0);
  const Field dd = dirac_apply(dirac_apply(h));
  const Field lap = laplacian(h);
  Field defect(grid);
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p)
    defect.coeff(p, 0) = dd.coeff(p, 0) + lap.coeff(p, 0);
  CHECK(interior_relative(defect, h, grid->margin_layers(0.1)) < 5e-2);
}

TEST_CASE("assembled operators reproduce their matrix-free forms") {
  auto grid = GridDomain::cube(2, 0.0, 0.5, 7);
  std::mt19937_64 rng(31);
  const Field w = RandomSmoothField(2, rng).sample(grid);

  const RealLinearOperator d = assemble_dirac(grid);
  CHECK(norm0(d.apply(w) - dirac_apply(w)) <= 1e-12 * norm0(dirac_apply(w)));

  const RealLinearOperator t = assemble_teodorescu(grid);
  CHECK(norm0(t.apply(w) - teodorescu_apply(w)) <= 1e-12 * norm0(w));

  const RealLinearOperator c = assemble_conjugation(grid);
  CHECK(norm0(c.apply(w) - conjugate(w)) == 0.0);

  const Field a = RandomSmoothField(2, rng).sample(grid);
  CHECK(norm0(assemble_left_mult(a).apply(w) - pointwise_product(a, w)) <=
        1e-12 * norm0(w));
  CHECK(norm0(assemble_right_mult(a).apply(w) - pointwise_product(w, a)) <=
        1e-12 * norm0(w));
}

TEST_CASE("conjugation is an involution, adjoint is an involution") {
  auto grid = GridDomain::cube(2, 0.0, 0.5, 5);
  const RealLinearOperator c = assemble_conjugation(grid);
  const Eigen::MatrixXd c2 = c.matrix * c.matrix;
  CHECK((c2 - Eigen::MatrixXd::Identity(c2.rows(), c2.cols())).norm() == 0.0);

  std::mt19937_64 rng(37);
  RealLinearOperator random_op = assemble_dirac(grid);
  std::normal_distribution<double> gauss;
  for (Eigen::Index i = 0; i < random_op.matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < random_op.matrix.cols(); ++j)
      random_op.matrix(i, j) += 0.1 * gauss(rng);
  const RealLinearOperator twice = adjoint(adjoint(random_op));
  CHECK((twice.matrix - random_op.matrix).norm() <=
        1e-12 * random_op.matrix.norm());
}

TEST_CASE("adjoint satisfies the pairing identity") {
  auto grid = GridDomain::cube(2, 0.0, 0.5, 7);
  std::mt19937_64 rng(41);
  const Field u = RandomSmoothField(2, rng).sample(grid);
  const Field v = RandomSmoothField(2, rng).sample(grid);
  const RealLinearOperator t = assemble_teodorescu(grid);
  const RealLinearOperator ts = adjoint(t);
  const double lhs = scalar_product(t.apply(u), v);
  const double rhs = scalar_product(u, ts.apply(v));
  CHECK(std::abs(lhs - rhs) <= 1e-10 * (std::abs(lhs) + 1.0));
}

TEST_CASE("teodorescu norm respects the diameter bound") {
  auto grid = GridDomain::cube(2, 0.0, 0.5, 13);
  const RealLinearOperator t = assemble_teodorescu(grid);
  std::mt19937_64 rng(43);
  const double norm = operator_norm_estimate(t, 25, rng);
  CHECK(norm <= grid->diameter() * 1.1);
  CHECK(norm > 0.0);
}

TEST_CASE("dense cap refuses oversized assemblies") {
  // 2^3 * 13^3 = 17576 > 8192
  auto grid = GridDomain::cube(3, 0.0, 0.5, 13);
  CHECK_THROWS_AS(assemble_dirac(grid), std::invalid_argument);
}

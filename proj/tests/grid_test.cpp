#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vekua/diffops.hpp"
#include "vekua/field.hpp"
#include "vekua/sampling.hpp"
#include "vekua/test_functions.hpp"

#include <Eigen/Dense>

#include <random>
#include <sstream>

using namespace vekua;

TEST_CASE("weights sum to the box volume") {
  for (int n : {1, 2, 3}) {
    auto grid = GridDomain::cube(n, 0.0, 1.0, 7);
    CHECK(grid->weights().sum() == doctest::Approx(1.0).epsilon(1e-12));
  }
  auto grid = GridDomain::uniform(2, {{{0.0, 2.0}}, {{-1.0, 0.5}}}, 9);
  CHECK(grid->weights().sum() == doctest::Approx(2.0 * 1.5).epsilon(1e-12));
}

TEST_CASE("boundary normals are unit outward, corners take the first face") {
  auto grid = GridDomain::cube(2, 0.0, 1.0, 5);
  int boundary = 0;
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p) {
    if (!grid->is_boundary(p)) continue;
    ++boundary;
    const Eigen::VectorXd eta = grid->normal(p);
    CHECK(eta.norm() == doctest::Approx(1.0).epsilon(1e-15));
    const Eigen::VectorXd x = grid->point(p);
    // outwardness: stepping along eta leaves the box
    const Eigen::VectorXd outside = x + 1e-6 * eta;
    bool left = false;
    for (int i = 0; i < 2; ++i)
      if (outside[i] < 0.0 || outside[i] > 1.0) left = true;
    CHECK(left);
  }
  CHECK(boundary == 16);
  const Eigen::VectorXd corner = grid->normal(grid->flat_index({0, 0}));
  CHECK(corner[0] == -1.0);  // lexicographically-first adjacent face
  CHECK(corner[1] == 0.0);
}

TEST_CASE("sampling examples") {
  auto grid = GridDomain::cube(2, 0.0, 1.0, 3);
  const Field ones = sample_scalar([](const Eigen::VectorXd&) { return 1.0; }, grid);
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p) {
    CHECK(ones.coeff(p, 0) == 1.0);
    CHECK(ones.coeff(p, 1) == 0.0);
  }

  const Field linear = sample(
      [](const Eigen::VectorXd& x) {
        Multivector mv(2);
        mv[0b01] = x[0];
        return mv;
      },
      grid);
  CHECK(linear.coeff(grid->flat_index({0, 0}), 0b01) == 0.0);
  CHECK(linear.coeff(grid->flat_index({1, 0}), 0b01) == 0.5);
  CHECK(linear.coeff(grid->flat_index({2, 0}), 0b01) == 1.0);

  // paper-style positive weight function stays positive
  const double d = grid->diameter();
  const Field f = sample_scalar(
      [d](const Eigen::VectorXd& x) { return std::exp(x.squaredNorm() / (2 * d * d)); },
      grid);
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p)
    CHECK(f.coeff(p, 0) > 0.0);

  CHECK_THROWS_AS(sample_scalar([](const Eigen::VectorXd& x) { return 1.0 / (x[0] - 0.5); },
                                grid),
                  std::domain_error);
}

TEST_CASE("scalar product axioms") {
  auto grid = GridDomain::cube(2, 0.0, 1.0, 5);
  const Field e1 = sample([](const Eigen::VectorXd&) { return Multivector::unit(2, 0b01); },
                          grid);
  const Field e2 = sample([](const Eigen::VectorXd&) { return Multivector::unit(2, 0b10); },
                          grid);
  CHECK(scalar_product(e1, e2) == doctest::Approx(0.0).epsilon(0).scale(1));

  const Field ones = sample_scalar([](const Eigen::VectorXd&) { return 1.0; }, grid);
  CHECK(scalar_product(ones, ones) == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937_64 rng(11);
  const Field u = RandomSmoothField(2, rng).sample(grid);
  const Field v = RandomSmoothField(2, rng).sample(grid);
  CHECK(scalar_product(u, v) == doctest::Approx(scalar_product(v, u)).epsilon(1e-13));
  CHECK(scalar_product(u, u) > 0.0);

  // coefficient identity: <u,u>_0 = sum of weighted squared coefficients
  double direct = 0.0;
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p)
    for (int b = 0; b < u.blade_count(); ++b)
      direct += grid->weight(p) * u.coeff(p, b) * u.coeff(p, b);
  CHECK(scalar_product(u, u) == doctest::Approx(direct).epsilon(1e-13));

  auto other = GridDomain::cube(2, 0.0, 1.0, 7);
  const Field w(other);
  CHECK_THROWS_AS((void)scalar_product(u, w), std::invalid_argument);
}

TEST_CASE("inner product: scalar part, right-linearity over constants") {
  auto grid = GridDomain::cube(2, 0.0, 1.0, 5);
  std::mt19937_64 rng(5);
  const Field u = RandomSmoothField(2, rng).sample(grid);
  const Field v = RandomSmoothField(2, rng).sample(grid);

  const Multivector ip = inner_product(u, v);
  CHECK(ip.scalar_part() == doctest::Approx(scalar_product(u, v)).epsilon(1e-13));

  const Field e1 = sample([](const Eigen::VectorXd&) { return Multivector::unit(2, 0b10); },
                          grid);
  const Multivector volume_e2 = inner_product(sample_scalar(
      [](const Eigen::VectorXd&) { return 1.0; }, grid), e1);
  CHECK(volume_e2[0b10] == doctest::Approx(1.0).epsilon(1e-12));

  Multivector a(2);
  a[0] = 0.3;
  a[0b01] = -1.1;
  a[0b11] = 0.7;
  const Multivector lhs = inner_product(u, right_multiply(v, a));
  const Multivector rhs = inner_product(u, v) * a;
  CHECK((lhs - rhs).norm() <= 1e-12 * (rhs.norm() + 1.0));
}

TEST_CASE("interior norm drops the outer layers") {
  auto grid = GridDomain::cube(2, 0.0, 1.0, 9);
  Field f(grid);
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p)
    if (grid->layer(p) == 0) f.coeff(p, 0) = 100.0;
  CHECK(norm0(f) > 0.0);
  CHECK(interior_norm0(f, 1) == 0.0);
}

TEST_CASE("stencils are exact on quadratics, including one-sided rows") {
  auto grid = GridDomain::cube(2, 0.0, 1.0, 6);
  const Field q = sample_scalar(
      [](const Eigen::VectorXd& x) { return 1.0 + 2 * x[0] - x[1] + 3 * x[0] * x[0]; },
      grid);
  const Field dq = partial_derivative(q, 0);
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p)
    CHECK(dq.coeff(p, 0) ==
          doctest::Approx(2.0 + 6.0 * grid->point(p)[0]).epsilon(1e-12));
}

TEST_CASE("dirac examples") {
  auto grid = GridDomain::cube(2, 0.0, 1.0, 5);
  const Field x1 = sample_scalar([](const Eigen::VectorXd& x) { return x[0]; }, grid);
  const Field dx1 = dirac_apply(x1);
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p) {
    CHECK(dx1.coeff(p, 0b01) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(dx1.coeff(p, 0)) < 1e-13);
  }

  const Field x1e1 = sample(
      [](const Eigen::VectorXd& x) {
        Multivector mv(2);
        mv[0b01] = x[0];
        return mv;
      },
      grid);
  const Field d2 = dirac_apply(x1e1);
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p)
    CHECK(d2.coeff(p, 0) == doctest::Approx(-1.0).epsilon(1e-13));

  // degree-1 monogenic: x1 e2 + x2 e1
  const Field mono = sample(
      [](const Eigen::VectorXd& x) {
        Multivector mv(2);
        mv[0b10] = x[0];
        mv[0b01] = x[1];
        return mv;
      },
      grid);
  CHECK(norm0(dirac_apply(mono)) < 1e-13);

  CHECK_THROWS_AS(GridDomain::cube(2, 0.0, 1.0, 2), std::invalid_argument);
}

TEST_CASE("refining the grid changes smooth quadrature at second order") {
  std::mt19937_64 rng(17);
  const RandomSmoothField uf(2, rng), vf(2, rng);
  std::vector<double> hs, errs;
  double reference = 0.0;
  {
    auto fine = GridDomain::cube(2, 0.0, 1.0, 65);
    reference = scalar_product(uf.sample(fine), vf.sample(fine));
  }
  for (int m : {5, 9, 17}) {
    auto grid = GridDomain::cube(2, 0.0, 1.0, m);
    hs.push_back(grid->max_spacing());
    errs.push_back(std::abs(scalar_product(uf.sample(grid), vf.sample(grid)) - reference));
  }
  CHECK(fit_order(hs, errs) > 1.7);
}

TEST_CASE("test function systems vanish on the boundary and are independent") {
  auto grid = GridDomain::cube(2, 0.0, 1.0, 5);
  const auto system = test_function_basis(grid, 1, {0});
  REQUIRE(system.size() == 1);
  int boundary_zeros = 0;
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p)
    if (grid->is_boundary(p)) {
      for (int b = 0; b < 4; ++b) CHECK(system.members[0].coeff(p, b) == 0.0);
      ++boundary_zeros;
    }
  CHECK(boundary_zeros == 16);
  // the single member is the centered hat
  CHECK(system.members[0].coeff(grid->flat_index({2, 2}), 0) == 1.0);

  for (TestProfile profile : {TestProfile::hat, TestProfile::bubble,
                              TestProfile::smooth_bump}) {
    const auto sys = test_function_basis(grid, 8, {0, 1}, profile);
    Eigen::MatrixXd gram(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        gram(i, j) = scalar_product(sys.members[i], sys.members[j]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    CHECK(lu.rank() == 8);
    for (const Field& member : sys.members)
      for (GridDomain::Index p = 0; p < grid->point_count(); ++p)
        if (grid->is_boundary(p))
          for (int b = 0; b < 4; ++b) CHECK(member.coeff(p, b) == 0.0);
  }

  // blade-multiplied members still vanish on the boundary
  const Field scaled = right_multiply(system.members[0], Multivector::unit(2, 0b01));
  for (GridDomain::Index p = 0; p < grid->point_count(); ++p)
    if (grid->is_boundary(p))
      for (int b = 0; b < 4; ++b) CHECK(scaled.coeff(p, b) == 0.0);

  CHECK_THROWS_AS(test_function_basis(grid, 1000, {0}), std::invalid_argument);
}

TEST_CASE("field CSV round trip format") {
  auto grid = GridDomain::cube(2, 0.0, 1.0, 3);
  std::mt19937_64 rng(2);
  const Field f = RandomSmoothField(2, rng).sample(grid);
  std::ostringstream os;
  write_csv(f, os);
  const std::string text = os.str();
  CHECK(text.substr(0, text.find('\n')) == "x1,x2,1,e1,e2,e12");
  std::size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 10);  // header + 9 points
}

#include "vekua/operators.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace vekua {

namespace {
using Index = Field::Index;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

double unit_sphere_area(int n) {
  if (n < 1) throw std::invalid_argument("unit_sphere_area: n >= 1 required");
  return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

Multivector cauchy_kernel(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  const double r = x.norm();
  if (r == 0.0) throw std::domain_error("cauchy_kernel: evaluation at the singularity");
  const double scale = -1.0 / (unit_sphere_area(n) * std::pow(r, n));
  return Multivector::vector(n, scale * x);
}

namespace {

/// int ln sqrt(c^2 + s^2) ds, antiderivative in s (c may be zero).
double log_antiderivative(double c, double t) {
  if (c == 0.0) return t == 0.0 ? 0.0 : t * std::log(std::abs(t)) - t;
  return 0.5 * (t * std::log(c * c + t * t) - 2.0 * t) + c * std::atan(t / c);
}

/// int int 1/sqrt(u^2 + v^2 + c^2) du dv, antiderivative at the corner (u,v).
double inv_r_antiderivative(double u, double v, double c) {
  const double r = std::sqrt(u * u + v * v + c * c);
  double out = 0.0;
  if (u != 0.0 && v + r != 0.0) out += u * std::log(v + r);
  if (v != 0.0 && u + r != 0.0) out += v * std::log(u + r);
  const double ac = std::abs(c);
  if (ac > 0.0 && r > 0.0) out -= ac * std::atan(u * v / (ac * r));
  return out;
}

double face_integral_2d(double c, double t0, double t1) {
  return log_antiderivative(c, t1) - log_antiderivative(c, t0);
}

double face_integral_3d(double c, double u0, double u1, double v0, double v1) {
  return inv_r_antiderivative(u1, v1, c) - inv_r_antiderivative(u0, v1, c) -
         inv_r_antiderivative(u1, v0, c) + inv_r_antiderivative(u0, v0, c);
}

}  // namespace

bool has_analytic_box_moment(int n) { return n == 2 || n == 3; }

Eigen::VectorXd cauchy_kernel_box_moment(const Eigen::VectorXd& x,
                                         const std::vector<std::array<double, 2>>& box) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(box.size()) != n)
    throw std::invalid_argument("cauchy_kernel_box_moment: box/point size mismatch");
  Eigen::VectorXd A = Eigen::VectorXd::Zero(n);

  if (n == 2) {
    // E_i(y-x) = d/dy_i [ln|y-x|] / (2 pi) up to the kernel sign; by the
    // divergence theorem the volume integral reduces to edge integrals of
    // the logarithm.
    for (int i = 0; i < 2; ++i) {
      const int j = 1 - i;
      const double hi = face_integral_2d(box[i][1] - x[i], box[j][0] - x[j], box[j][1] - x[j]);
      const double lo = face_integral_2d(box[i][0] - x[i], box[j][0] - x[j], box[j][1] - x[j]);
      A[i] = -(hi - lo) / (2.0 * kPi);
    }
    return A;
  }
  if (n == 3) {
    // E_i(y-x) = d/dy_i [-1/|y-x|] / sigma_3; face integrals of 1/r are in
    // closed form.
    const double sigma = unit_sphere_area(3);
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      const double hi = face_integral_3d(box[i][1] - x[i], box[j][0] - x[j],
                                         box[j][1] - x[j], box[k][0] - x[k],
                                         box[k][1] - x[k]);
      const double lo = face_integral_3d(box[i][0] - x[i], box[j][0] - x[j],
                                         box[j][1] - x[j], box[k][0] - x[k],
                                         box[k][1] - x[k]);
      A[i] = (hi - lo) / sigma;
    }
    return A;
  }
  throw std::invalid_argument("cauchy_kernel_box_moment: only n = 2, 3 supported");
}

namespace {

/// Left multiplication by a grade-1 vector v, accumulated into out at one
/// point: out[bit_i ^ b] += sign(bit_i, b) * v_i * w[b].
inline void accumulate_vector_product(const BladeTable& table, int n,
                                      const Eigen::VectorXd& v, const double* w,
                                      double factor, double* out) {
  const int nb = 1 << n;
  for (int i = 0; i < n; ++i) {
    const double vi = factor * v[i];
    if (vi == 0.0) continue;
    const unsigned bit = 1u << i;
    for (int b = 0; b < nb; ++b)
      out[bit ^ b] += table.sign(bit, b) * vi * w[b];
  }
}

}  // namespace

Field teodorescu_apply(const Field& w) {
  const GridDomain& g = w.grid();
  const int n = g.dimension();
  const int nb = w.blade_count();
  const BladeTable& table = BladeTable::for_dimension(n);
  const Index count = g.point_count();
  const Eigen::VectorXd& wt = g.weights();
  const bool subtract = has_analytic_box_moment(n);

  Field out(w.grid_ptr());
  Eigen::VectorXd diff(nb);
  for (Index p = 0; p < count; ++p) {
    const Eigen::VectorXd xp = g.point(p);
    const double* wp = w.flat().data() + p * nb;
    double* op = out.flat().data() + p * nb;
    for (Index q = 0; q < count; ++q) {
      if (q == p) continue;  // zero self cell
      const Eigen::VectorXd d = g.point(q) - xp;
      const double r = d.norm();
      const double scale = wt[q] / (unit_sphere_area(n) * std::pow(r, n));
      // -E(y-x) = d / (sigma |d|^n); kernel sign folded into `scale`.
      const double* wq = w.flat().data() + q * nb;
      if (subtract) {
        for (int b = 0; b < nb; ++b) diff[b] = wq[b] - wp[b];
        accumulate_vector_product(table, n, d, diff.data(), scale, op);
      } else {
        accumulate_vector_product(table, n, d, wq, scale, op);
      }
    }
    if (subtract) {
      const Eigen::VectorXd A = cauchy_kernel_box_moment(xp, g.box());
      accumulate_vector_product(table, n, A, wp, -1.0, op);
    }
  }
  return out;
}

Eigen::Index RealLinearOperator::max_dense_dimension() { return 8192; }

Field RealLinearOperator::apply(const Field& w) const {
  if (!same_grid(*grid, w.grid()))
    throw std::invalid_argument("RealLinearOperator::apply: grid mismatch");
  Field out(w.grid_ptr());
  out.flat() = matrix * w.flat();
  return out;
}

namespace {

Eigen::Index checked_dimension(const GridDomain& g) {
  const Eigen::Index dim = g.point_count() * (Eigen::Index(1) << g.dimension());
  if (dim > RealLinearOperator::max_dense_dimension())
    throw std::invalid_argument("operator assembly: " + std::to_string(dim) +
                                " unknowns exceeds the dense cap " +
                                std::to_string(RealLinearOperator::max_dense_dimension()));
  return dim;
}

}  // namespace

RealLinearOperator identity_operator(std::shared_ptr<const GridDomain> grid) {
  const Eigen::Index dim = checked_dimension(*grid);
  return {grid, "I", Eigen::MatrixXd::Identity(dim, dim)};
}

RealLinearOperator assemble_dirac(std::shared_ptr<const GridDomain> grid) {
  const GridDomain& g = *grid;
  const Eigen::Index dim = checked_dimension(g);
  const int n = g.dimension();
  const int nb = 1 << n;
  const int m = g.points_per_axis();
  const BladeTable& table = BladeTable::for_dimension(n);
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);

  for (int axis = 0; axis < n; ++axis) {
    Index stride = 1;
    for (int i = n - 1; i > axis; --i) stride *= m;
    const double h = g.spacing(axis);
    const unsigned bit = 1u << axis;
    for (Index p = 0; p < g.point_count(); ++p) {
      const int i = g.axis_index(p, axis);
      // stencil offsets (in points) and coefficients
      std::array<std::pair<Index, double>, 3> taps;
      int ntap;
      if (i == 0) {
        taps = {{{0, -3.0}, {stride, 4.0}, {2 * stride, -1.0}}};
        ntap = 3;
      } else if (i == m - 1) {
        taps = {{{0, 3.0}, {-stride, -4.0}, {-2 * stride, 1.0}}};
        ntap = 3;
      } else {
        taps = {{{stride, 1.0}, {-stride, -1.0}, {0, 0.0}}};
        ntap = 2;
      }
      for (int t = 0; t < ntap; ++t) {
        const Index q = p + taps[t].first;
        const double c = taps[t].second / (2.0 * h);
        for (int b = 0; b < nb; ++b)
          mat(p * nb + (bit ^ b), q * nb + b) += table.sign(bit, b) * c;
      }
    }
  }
  return {grid, "D", std::move(mat)};
}

RealLinearOperator assemble_teodorescu(std::shared_ptr<const GridDomain> grid) {
  const GridDomain& g = *grid;
  const Eigen::Index dim = checked_dimension(g);
  const int n = g.dimension();
  const int nb = 1 << n;
  const BladeTable& table = BladeTable::for_dimension(n);
  const Eigen::VectorXd& wt = g.weights();
  const bool subtract = has_analytic_box_moment(n);
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);

  for (Index p = 0; p < g.point_count(); ++p) {
    const Eigen::VectorXd xp = g.point(p);
    Eigen::VectorXd vsum = Eigen::VectorXd::Zero(n);
    for (Index q = 0; q < g.point_count(); ++q) {
      if (q == p) continue;
      const Eigen::VectorXd d = g.point(q) - xp;
      const double r = d.norm();
      const Eigen::VectorXd v = d * (wt[q] / (unit_sphere_area(n) * std::pow(r, n)));
      vsum += v;
      for (int i = 0; i < n; ++i) {
        const unsigned bit = 1u << i;
        for (int b = 0; b < nb; ++b)
          mat(p * nb + (bit ^ b), q * nb + b) += table.sign(bit, b) * v[i];
      }
    }
    if (subtract) {
      // diagonal block of the subtracted rule: -(sum_q v + A(x_p)) w(p)
      const Eigen::VectorXd vd = vsum + cauchy_kernel_box_moment(xp, g.box());
      for (int i = 0; i < n; ++i) {
        const unsigned bit = 1u << i;
        for (int b = 0; b < nb; ++b)
          mat(p * nb + (bit ^ b), p * nb + b) -= table.sign(bit, b) * vd[i];
      }
    }
  }
  return {grid, "T", std::move(mat)};
}

RealLinearOperator assemble_conjugation(std::shared_ptr<const GridDomain> grid) {
  const GridDomain& g = *grid;
  const Eigen::Index dim = checked_dimension(g);
  const int nb = 1 << g.dimension();
  const BladeTable& table = BladeTable::for_dimension(g.dimension());
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);
  for (Index p = 0; p < g.point_count(); ++p)
    for (int b = 0; b < nb; ++b)
      mat(p * nb + b, p * nb + b) = table.conjugation_sign(b);
  return {grid, "C", std::move(mat)};
}

namespace {

RealLinearOperator assemble_pointwise_mult(const Field& a, bool left) {
  const GridDomain& g = a.grid();
  const Eigen::Index dim = checked_dimension(g);
  const int nb = a.blade_count();
  const BladeTable& table = BladeTable::for_dimension(g.dimension());
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);
  for (Index p = 0; p < g.point_count(); ++p)
    for (int i = 0; i < nb; ++i) {
      const double c = a.coeff(p, i);
      if (c == 0.0) continue;
      for (int b = 0; b < nb; ++b) {
        const int sign = left ? table.sign(i, b) : table.sign(b, i);
        mat(p * nb + (i ^ b), p * nb + b) += sign * c;
      }
    }
  return {a.grid_ptr(), left ? "L" : "R", std::move(mat)};
}

}  // namespace

RealLinearOperator assemble_left_mult(const Field& a) {
  return assemble_pointwise_mult(a, true);
}

RealLinearOperator assemble_right_mult(const Field& a) {
  return assemble_pointwise_mult(a, false);
}

RealLinearOperator compose(const RealLinearOperator& a, const RealLinearOperator& b) {
  if (!same_grid(*a.grid, *b.grid))
    throw std::invalid_argument("compose: grid mismatch");
  return {a.grid, a.label + "*" + b.label, a.matrix * b.matrix};
}

RealLinearOperator add(const RealLinearOperator& a, const RealLinearOperator& b) {
  if (!same_grid(*a.grid, *b.grid)) throw std::invalid_argument("add: grid mismatch");
  return {a.grid, a.label + "+" + b.label, a.matrix + b.matrix};
}

RealLinearOperator subtract(const RealLinearOperator& a, const RealLinearOperator& b) {
  if (!same_grid(*a.grid, *b.grid)) throw std::invalid_argument("subtract: grid mismatch");
  return {a.grid, a.label + "-" + b.label, a.matrix - b.matrix};
}

RealLinearOperator scale(const RealLinearOperator& a, double s) {
  return {a.grid, a.label, a.matrix * s};
}

namespace {

Eigen::VectorXd blade_weights(const GridDomain& g) {
  const int nb = 1 << g.dimension();
  Eigen::VectorXd w(g.point_count() * nb);
  for (Index p = 0; p < g.point_count(); ++p)
    w.segment(p * nb, nb).setConstant(g.weight(p));
  return w;
}

}  // namespace

RealLinearOperator adjoint(const RealLinearOperator& a) {
  const Eigen::VectorXd w = blade_weights(*a.grid);
  Eigen::MatrixXd mat = a.matrix.transpose();
  // A* = W^{-1} A^T W
  mat.array().colwise() /= w.array();
  mat.array().rowwise() *= w.transpose().array();
  return {a.grid, a.label + "*", std::move(mat)};
}

double operator_norm_estimate(const RealLinearOperator& a, int iterations,
                              std::mt19937_64& rng) {
  const Eigen::VectorXd w = blade_weights(*a.grid);
  const Eigen::VectorXd ws = w.array().sqrt();
  std::normal_distribution<double> gauss;
  Eigen::VectorXd v(a.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = gauss(rng);
  v.normalize();
  double norm = 0.0;
  // power iteration on M^T M with M = W^{1/2} A W^{-1/2}
  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXd mv = ws.cwiseProduct(a.matrix * v.cwiseQuotient(ws));
    Eigen::VectorXd mtmv =
        ws.cwiseInverse().cwiseProduct(a.matrix.transpose() * ws.cwiseProduct(mv));
    norm = std::sqrt(mtmv.norm());
    v = mtmv.normalized();
  }
  return norm;
}

double condition_estimate(const RealLinearOperator& a, int iterations,
                          std::mt19937_64& rng) {
  const double smax = operator_norm_estimate(a, iterations, rng);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a.matrix);
  const Eigen::VectorXd w = blade_weights(*a.grid);
  const Eigen::VectorXd ws = w.array().sqrt();
  std::normal_distribution<double> gauss;
  Eigen::VectorXd v(a.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = gauss(rng);
  v.normalize();
  double inv_norm = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const Eigen::VectorXd mv =
        ws.cwiseProduct(lu.solve(Eigen::VectorXd(v.cwiseQuotient(ws))));
    const Eigen::VectorXd ts =
        lu.transpose().solve(Eigen::VectorXd(ws.cwiseProduct(mv)));
    const Eigen::VectorXd mtmv = ws.cwiseInverse().cwiseProduct(ts);
    inv_norm = std::sqrt(mtmv.norm());
    v = mtmv.normalized();
  }
  return smax * inv_norm;
}

void write_matrix_csv(const RealLinearOperator& a, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_matrix_csv: cannot open " + path);
  os.precision(17);
  for (Eigen::Index i = 0; i < a.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.matrix.cols(); ++j) {
      os << a.matrix(i, j);
      os << (j + 1 < a.matrix.cols() ? ',' : '\n');
    }
  }
}

void write_matrix_binary(const RealLinearOperator& a, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_matrix_binary: cannot open " + path);
  const std::int64_t rows = a.matrix.rows(), cols = a.matrix.cols();
  os.write(reinterpret_cast<const char*>(&rows), sizeof rows);
  os.write(reinterpret_cast<const char*>(&cols), sizeof cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    os.write(reinterpret_cast<const char*>(a.matrix.row(i).eval().data()),
             static_cast<std::streamsize>(sizeof(double) * cols));
}

}  // namespace vekua

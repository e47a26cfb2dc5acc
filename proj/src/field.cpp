#include "vekua/field.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vekua {

Field::Field(std::shared_ptr<const GridDomain> grid)
    : grid_(std::move(grid)),
      blade_count_(1 << grid_->dimension()),
      data_(Eigen::VectorXd::Zero(grid_->point_count() * blade_count_)) {
  (void)BladeTable::for_dimension(grid_->dimension());
}

Multivector Field::at(Index p) const {
  Multivector mv(dimension());
  mv.coeffs() = data_.segment(p * blade_count_, blade_count_);
  return mv;
}

void Field::set(Index p, const Multivector& value) {
  if (value.dimension() != dimension())
    throw std::invalid_argument("Field::set: multivector dimension mismatch");
  data_.segment(p * blade_count_, blade_count_) = value.coeffs();
}

void check_same_grid(const Field& a, const Field& b, const char* where) {
  if (!same_grid(a.grid(), b.grid()))
    throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

Field& Field::operator+=(const Field& rhs) {
  check_same_grid(*this, rhs, "Field::operator+=");
  data_ += rhs.data_;
  return *this;
}

Field& Field::operator-=(const Field& rhs) {
  check_same_grid(*this, rhs, "Field::operator-=");
  data_ -= rhs.data_;
  return *this;
}

Field& Field::operator*=(double s) {
  data_ *= s;
  return *this;
}

Field Field::operator+(const Field& rhs) const {
  Field out = *this;
  out += rhs;
  return out;
}

Field Field::operator-(const Field& rhs) const {
  Field out = *this;
  out -= rhs;
  return out;
}

Field Field::operator*(double s) const {
  Field out = *this;
  out *= s;
  return out;
}

Field Field::operator-() const { return *this * -1.0; }

Field Field::component(unsigned blade) const {
  Field out(grid_);
  for (Index p = 0; p < grid_->point_count(); ++p)
    out.coeff(p, 0) = coeff(p, blade);
  return out;
}

Field pointwise_product(const Field& a, const Field& b) {
  check_same_grid(a, b, "pointwise_product");
  const BladeTable& table = BladeTable::for_dimension(a.dimension());
  const int nb = a.blade_count();
  Field out(a.grid_ptr());
  for (Field::Index p = 0; p < a.grid().point_count(); ++p) {
    for (int i = 0; i < nb; ++i) {
      const double ca = a.coeff(p, i);
      if (ca == 0.0) continue;
      for (int j = 0; j < nb; ++j) {
        const double cb = b.coeff(p, j);
        if (cb == 0.0) continue;
        out.coeff(p, i ^ j) += table.sign(i, j) * ca * cb;
      }
    }
  }
  return out;
}

Field scale_by_scalar_field(const Field& s, const Field& a) {
  check_same_grid(s, a, "scale_by_scalar_field");
  Field out = a;
  const int nb = a.blade_count();
  for (Field::Index p = 0; p < a.grid().point_count(); ++p) {
    const double v = s.coeff(p, 0);
    for (int b = 0; b < nb; ++b) out.coeff(p, b) *= v;
  }
  return out;
}

Field conjugate(const Field& a) {
  const BladeTable& table = BladeTable::for_dimension(a.dimension());
  Field out = a;
  for (Field::Index p = 0; p < a.grid().point_count(); ++p)
    for (int b = 0; b < a.blade_count(); ++b)
      out.coeff(p, b) = table.conjugation_sign(b) * a.coeff(p, b);
  return out;
}

Field right_multiply(const Field& a, const Multivector& c) {
  if (c.dimension() != a.dimension())
    throw std::invalid_argument("right_multiply: dimension mismatch");
  const BladeTable& table = BladeTable::for_dimension(a.dimension());
  const int nb = a.blade_count();
  Field out(a.grid_ptr());
  for (Field::Index p = 0; p < a.grid().point_count(); ++p)
    for (int i = 0; i < nb; ++i) {
      const double ca = a.coeff(p, i);
      if (ca == 0.0) continue;
      for (int j = 0; j < nb; ++j) {
        const double cc = c[j];
        if (cc == 0.0) continue;
        out.coeff(p, i ^ j) += table.sign(i, j) * ca * cc;
      }
    }
  return out;
}

Field left_multiply(const Multivector& c, const Field& a) {
  if (c.dimension() != a.dimension())
    throw std::invalid_argument("left_multiply: dimension mismatch");
  const BladeTable& table = BladeTable::for_dimension(a.dimension());
  const int nb = a.blade_count();
  Field out(a.grid_ptr());
  for (Field::Index p = 0; p < a.grid().point_count(); ++p)
    for (int i = 0; i < nb; ++i) {
      const double cc = c[i];
      if (cc == 0.0) continue;
      for (int j = 0; j < nb; ++j) {
        const double ca = a.coeff(p, j);
        if (ca == 0.0) continue;
        out.coeff(p, i ^ j) += table.sign(i, j) * cc * ca;
      }
    }
  return out;
}

Field sample(const std::function<Multivector(const Eigen::VectorXd&)>& fn,
             std::shared_ptr<const GridDomain> grid) {
  Field out(grid);
  for (Field::Index p = 0; p < grid->point_count(); ++p) {
    Multivector value = fn(grid->point(p));
    if (!value.all_finite()) {
      std::ostringstream msg;
      msg << "sample: non-finite value at point (" << grid->point(p).transpose() << ")";
      throw std::domain_error(msg.str());
    }
    out.set(p, value);
  }
  return out;
}

Field sample_scalar(const std::function<double(const Eigen::VectorXd&)>& fn,
                    std::shared_ptr<const GridDomain> grid) {
  const int n = grid->dimension();
  return sample([&](const Eigen::VectorXd& x) { return Multivector::scalar(n, fn(x)); },
                std::move(grid));
}

double scalar_product(const Field& u, const Field& v) {
  check_same_grid(u, v, "scalar_product");
  const int nb = u.blade_count();
  const Eigen::VectorXd& w = u.grid().weights();
  double acc = 0.0;
  for (Field::Index p = 0; p < u.grid().point_count(); ++p)
    acc += w[p] * u.flat().segment(p * nb, nb).dot(v.flat().segment(p * nb, nb));
  return acc;
}

Multivector inner_product(const Field& u, const Field& v) {
  check_same_grid(u, v, "inner_product");
  const Eigen::VectorXd& w = u.grid().weights();
  Multivector acc(u.dimension());
  for (Field::Index p = 0; p < u.grid().point_count(); ++p)
    acc += (u.at(p).conjugate() * v.at(p)) * w[p];
  return acc;
}

double norm0(const Field& u) {
  const int nb = u.blade_count();
  const Eigen::VectorXd& w = u.grid().weights();
  double acc = 0.0;
  for (Field::Index p = 0; p < u.grid().point_count(); ++p)
    acc += w[p] * u.flat().segment(p * nb, nb).squaredNorm();
  return std::sqrt(acc);
}

double interior_norm0(const Field& u, int layers) {
  const int nb = u.blade_count();
  const Eigen::VectorXd& w = u.grid().weights();
  double acc = 0.0;
  for (Field::Index p = 0; p < u.grid().point_count(); ++p)
    if (u.grid().layer(p) >= layers)
      acc += w[p] * u.flat().segment(p * nb, nb).squaredNorm();
  return std::sqrt(acc);
}

double sup_norm(const Field& u) {
  const int nb = u.blade_count();
  double best = 0.0;
  for (Field::Index p = 0; p < u.grid().point_count(); ++p)
    best = std::max(best, u.flat().segment(p * nb, nb).norm());
  return best;
}

void write_csv(const Field& f, std::ostream& os) {
  const GridDomain& g = f.grid();
  const BladeTable& table = BladeTable::for_dimension(g.dimension());
  for (int i = 0; i < g.dimension(); ++i) os << "x" << (i + 1) << ",";
  for (int b = 0; b < f.blade_count(); ++b) {
    os << table.blade_name(b);
    os << (b + 1 < f.blade_count() ? ',' : '\n');
  }
  os.precision(17);
  for (Field::Index p = 0; p < g.point_count(); ++p) {
    const Eigen::VectorXd x = g.point(p);
    for (int i = 0; i < g.dimension(); ++i) os << x[i] << ",";
    for (int b = 0; b < f.blade_count(); ++b) {
      os << f.coeff(p, b);
      os << (b + 1 < f.blade_count() ? ',' : '\n');
    }
  }
}

void write_csv(const Field& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_csv: cannot open " + path);
  write_csv(f, os);
}

}  // namespace vekua

#pragma once

#include "vekua/clifford.hpp"
#include "vekua/grid.hpp"

#include <functional>
#include <iosfwd>
#include <memory>

namespace vekua {

/// A Cl(0,n)-valued grid function: one multivector per grid point, stored
/// flat in point-major order (point * blade_count + blade). The flat layout
/// is what assembled operators act on.
class Field {
public:
  using Index = GridDomain::Index;

  explicit Field(std::shared_ptr<const GridDomain> grid);

  const std::shared_ptr<const GridDomain>& grid_ptr() const { return grid_; }
  const GridDomain& grid() const { return *grid_; }
  int dimension() const { return grid_->dimension(); }
  int blade_count() const { return blade_count_; }
  Index flat_size() const { return data_.size(); }

  double coeff(Index p, unsigned blade) const { return data_[p * blade_count_ + blade]; }
  double& coeff(Index p, unsigned blade) { return data_[p * blade_count_ + blade]; }

  Multivector at(Index p) const;
  void set(Index p, const Multivector& value);

  const Eigen::VectorXd& flat() const { return data_; }
  Eigen::VectorXd& flat() { return data_; }

  Field& operator+=(const Field& rhs);
  Field& operator-=(const Field& rhs);
  Field& operator*=(double s);
  Field operator+(const Field& rhs) const;
  Field operator-(const Field& rhs) const;
  Field operator*(double s) const;
  Field operator-() const;

  bool all_finite() const { return data_.allFinite(); }

  /// Extract one blade coefficient as a scalar field (values on blade 0).
  Field component(unsigned blade) const;

private:
  std::shared_ptr<const GridDomain> grid_;
  int blade_count_;
  Eigen::VectorXd data_;
};

inline Field operator*(double s, const Field& f) { return f * s; }

void check_same_grid(const Field& a, const Field& b, const char* where);

/// Pointwise Clifford product a(x) b(x).
Field pointwise_product(const Field& a, const Field& b);

/// Pointwise product by a scalar-valued field (blade-0 coefficients of s).
Field scale_by_scalar_field(const Field& s, const Field& a);

/// Pointwise conjugation.
Field conjugate(const Field& a);

/// Pointwise right multiplication by a constant multivector.
Field right_multiply(const Field& a, const Multivector& c);

/// Pointwise left multiplication by a constant multivector.
Field left_multiply(const Multivector& c, const Field& a);

/// Sample a pointwise function on the lattice. Throws if a value is not
/// finite, reporting the offending point.
Field sample(const std::function<Multivector(const Eigen::VectorXd&)>& fn,
             std::shared_ptr<const GridDomain> grid);

/// Sample a scalar function into the blade-0 component.
Field sample_scalar(const std::function<double(const Eigen::VectorXd&)>& fn,
                    std::shared_ptr<const GridDomain> grid);

/// Quadrature scalar product <u,v>_0 = sum_p weight(p) Sc(conj(u) v).
double scalar_product(const Field& u, const Field& v);

/// Quadrature Clifford inner product <u,v> = sum_p weight(p) conj(u) v.
Multivector inner_product(const Field& u, const Field& v);

/// sqrt(<u,u>_0).
double norm0(const Field& u);

/// Norm restricted to points at least `layers` lattice layers away from the
/// boundary.
double interior_norm0(const Field& u, int layers);

/// Max over points of the pointwise coefficient norm |u(x)|.
double sup_norm(const Field& u);

/// CSV dump: point coordinates followed by one column per blade coefficient.
void write_csv(const Field& f, std::ostream& os);
void write_csv(const Field& f, const std::string& path);

}  // namespace vekua

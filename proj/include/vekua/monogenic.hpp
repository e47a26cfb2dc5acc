#pragma once

#include "vekua/field.hpp"

#include <map>
#include <vector>

namespace vekua {

/// Multivariate polynomial with Cl(0,n) coefficients, exponents stored per
/// monomial. Degrees stay tiny here (candidate generation only).
class PolyMultivector {
public:
  using Exponents = std::vector<int>;

  PolyMultivector(int clifford_dim, int variables)
      : n_(clifford_dim), vars_(variables) {}

  int clifford_dimension() const { return n_; }
  int variables() const { return vars_; }
  bool empty() const { return terms_.empty(); }
  const std::map<Exponents, Multivector>& terms() const { return terms_; }

  static PolyMultivector constant(int clifford_dim, int variables,
                                  const Multivector& value);
  /// The affine monomial (x_axis - shift).
  static PolyMultivector coordinate(int clifford_dim, int variables, int axis,
                                    double shift);

  void add_term(const Exponents& exp, const Multivector& coeff);

  PolyMultivector operator+(const PolyMultivector& rhs) const;
  PolyMultivector operator*(const PolyMultivector& rhs) const;
  PolyMultivector operator*(double s) const;
  /// Left multiplication of every coefficient by a constant multivector.
  PolyMultivector left_multiplied(const Multivector& c) const;
  PolyMultivector derivative(int axis) const;

  int total_degree() const;
  Multivector evaluate(const Eigen::VectorXd& x) const;
  /// Exact application of the Moisil-Teodorescu operator on coefficients.
  PolyMultivector dirac() const;

private:
  int n_;
  int vars_;
  std::map<Exponents, Multivector> terms_;
};

/// Cauchy-Kovalevskaya extension: given w0 polynomial in the first n-1
/// coordinates, produce the unique monogenic polynomial with trace w0 on the
/// hyperplane x_n = center_n. The extension is the finite series
///   w = sum_k ((x_n - c_n)^k / k!) (e_n sum_{i<n} e_i d_i)^k w0.
PolyMultivector ck_extension(const PolyMultivector& w0, double center_last);

/// Exact monogenic polynomial candidates on the grid: CK extensions of
/// (x' - c')^gamma e_A over |gamma| <= max_degree and all blades A, centered
/// at the box midpoint. Ordered by degree, then lexicographic exponent, then
/// blade index.
std::vector<PolyMultivector> monogenic_polynomials(const GridDomain& grid,
                                                   int max_degree);

std::vector<Field> monogenic_candidates(std::shared_ptr<const GridDomain> grid,
                                        int max_degree);

Field sample_poly(const PolyMultivector& poly, std::shared_ptr<const GridDomain> grid);

}  // namespace vekua

#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace vekua {

/// Default cap on the algebra dimension n. Sign tables store 4^n entries,
/// so this is a guard against accidental huge allocations, not a hard limit.
/// Adjustable via BladeTable::set_dimension_limit.
inline constexpr int kDefaultDimensionLimit = 5;

/// Precomputed multiplication data for the real Clifford algebra Cl(0,n)
/// with generators e_1..e_n satisfying e_i e_j + e_j e_i = -2 delta_ij.
/// Blades are indexed by bitmask: bit i-1 set means e_i is a factor, so
/// blade 0 is the scalar unit. e_A e_B = sign(A,B) e_{A xor B}.
///
/// Immutable after construction; instances are cached per dimension and
/// safe to share across threads.
class BladeTable {
public:
  static const BladeTable& for_dimension(int n);

  static int dimension_limit();
  static void set_dimension_limit(int limit);

  int dimension() const { return n_; }
  int blade_count() const { return blade_count_; }

  /// Product sign of e_A e_B; the result blade is A xor B.
  int sign(unsigned a, unsigned b) const {
    return signs_[static_cast<std::size_t>(a) * blade_count_ + b];
  }

  /// Conjugation sign (-1)^{|B|(|B|+1)/2} of blade B.
  int conjugation_sign(unsigned b) const { return conj_signs_[b]; }

  /// Number of generators in blade B.
  static int grade(unsigned b);

  /// Human-readable blade name such as "1", "e1", "e12".
  std::string blade_name(unsigned b) const;

private:
  explicit BladeTable(int n);

  int n_;
  int blade_count_;
  std::vector<std::int8_t> signs_;
  std::vector<std::int8_t> conj_signs_;
};

/// Element of Cl(0,n): one real coefficient per blade bitmask.
class Multivector {
public:
  explicit Multivector(int n)
      : n_(n), coeffs_(Eigen::VectorXd::Zero(1 << n)) {
    (void)BladeTable::for_dimension(n);
  }

  static Multivector scalar(int n, double value);
  static Multivector unit(int n, unsigned blade);
  /// Grade-1 element with the given coordinates (size n).
  static Multivector vector(int n, const Eigen::VectorXd& coords);

  int dimension() const { return n_; }
  int blade_count() const { return static_cast<int>(coeffs_.size()); }

  double operator[](unsigned blade) const { return coeffs_[blade]; }
  double& operator[](unsigned blade) { return coeffs_[blade]; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }
  Eigen::VectorXd& coeffs() { return coeffs_; }

  Multivector operator+(const Multivector& rhs) const;
  Multivector operator-(const Multivector& rhs) const;
  Multivector operator*(const Multivector& rhs) const;
  Multivector operator*(double s) const;
  Multivector operator-() const { return *this * -1.0; }
  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);

  Multivector conjugate() const;
  double scalar_part() const { return coeffs_[0]; }
  Multivector nonscalar_part() const;
  /// Grade-1 coefficients as a length-n vector.
  Eigen::VectorXd vector_part() const;

  /// Euclidean norm of the coefficient array, sqrt(Sc(conj(a) a)).
  double norm() const { return coeffs_.norm(); }

  bool all_finite() const { return coeffs_.allFinite(); }

private:
  int n_;
  Eigen::VectorXd coeffs_;
};

inline Multivector operator*(double s, const Multivector& a) { return a * s; }

/// Sc(conj(a) b); equals the Euclidean dot of the coefficient arrays.
double scalar_inner(const Multivector& a, const Multivector& b);

}  // namespace vekua

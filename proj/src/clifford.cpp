#include "vekua/clifford.hpp"

#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace vekua {

namespace {

std::atomic<int> g_dimension_limit{kDefaultDimensionLimit};

/// Sign from reordering e_A e_B into canonical order plus the e_i^2 = -1
/// contractions of shared generators.
int product_sign(unsigned a, unsigned b) {
  int swaps = 0;
  unsigned at = a >> 1;
  while (at != 0) {
    swaps += std::popcount(at & b);
    at >>= 1;
  }
  int sign = (swaps % 2 == 0) ? 1 : -1;
  if (std::popcount(a & b) % 2 != 0) sign = -sign;
  return sign;
}

}  // namespace

BladeTable::BladeTable(int n) : n_(n), blade_count_(1 << n) {
  signs_.resize(static_cast<std::size_t>(blade_count_) * blade_count_);
  for (unsigned a = 0; a < static_cast<unsigned>(blade_count_); ++a)
    for (unsigned b = 0; b < static_cast<unsigned>(blade_count_); ++b)
      signs_[static_cast<std::size_t>(a) * blade_count_ + b] =
          static_cast<std::int8_t>(product_sign(a, b));

  conj_signs_.resize(blade_count_);
  for (unsigned b = 0; b < static_cast<unsigned>(blade_count_); ++b) {
    const int k = grade(b);
    conj_signs_[b] = static_cast<std::int8_t>((k * (k + 1) / 2) % 2 == 0 ? 1 : -1);
  }
}

const BladeTable& BladeTable::for_dimension(int n) {
  if (n < 1) throw std::invalid_argument("BladeTable: dimension must be >= 1");
  if (n > dimension_limit())
    throw std::invalid_argument("BladeTable: dimension " + std::to_string(n) +
                                " exceeds limit " + std::to_string(dimension_limit()));
  static std::mutex mutex;
  static std::map<int, BladeTable> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, BladeTable(n)).first;
  return it->second;
}

int BladeTable::dimension_limit() { return g_dimension_limit.load(); }

void BladeTable::set_dimension_limit(int limit) {
  if (limit < 1 || limit > 12)
    throw std::invalid_argument("BladeTable: limit out of range");
  g_dimension_limit.store(limit);
}

int BladeTable::grade(unsigned b) { return std::popcount(b); }

std::string BladeTable::blade_name(unsigned b) const {
  if (b == 0) return "1";
  std::string name = "e";
  for (int i = 0; i < n_; ++i)
    if (b & (1u << i)) name += std::to_string(i + 1);
  return name;
}

Multivector Multivector::scalar(int n, double value) {
  Multivector mv(n);
  mv[0] = value;
  return mv;
}

Multivector Multivector::unit(int n, unsigned blade) {
  Multivector mv(n);
  if (blade >= static_cast<unsigned>(mv.blade_count()))
    throw std::invalid_argument("Multivector::unit: blade index out of range");
  mv[blade] = 1.0;
  return mv;
}

Multivector Multivector::vector(int n, const Eigen::VectorXd& coords) {
  if (coords.size() != n)
    throw std::invalid_argument("Multivector::vector: coordinate size mismatch");
  Multivector mv(n);
  for (int i = 0; i < n; ++i) mv[1u << i] = coords[i];
  return mv;
}

namespace {
void check_same_dimension(const Multivector& a, const Multivector& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("Multivector: dimension mismatch");
}
}  // namespace

Multivector Multivector::operator+(const Multivector& rhs) const {
  check_same_dimension(*this, rhs);
  Multivector out(n_);
  out.coeffs() = coeffs_ + rhs.coeffs_;
  return out;
}

Multivector Multivector::operator-(const Multivector& rhs) const {
  check_same_dimension(*this, rhs);
  Multivector out(n_);
  out.coeffs() = coeffs_ - rhs.coeffs_;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  check_same_dimension(*this, rhs);
  coeffs_ += rhs.coeffs_;
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  check_same_dimension(*this, rhs);
  coeffs_ -= rhs.coeffs_;
  return *this;
}

Multivector Multivector::operator*(const Multivector& rhs) const {
  check_same_dimension(*this, rhs);
  const BladeTable& table = BladeTable::for_dimension(n_);
  const int nb = blade_count();
  Multivector out(n_);
  for (int a = 0; a < nb; ++a) {
    const double ca = coeffs_[a];
    if (ca == 0.0) continue;
    for (int b = 0; b < nb; ++b) {
      const double cb = rhs.coeffs_[b];
      if (cb == 0.0) continue;
      out.coeffs()[a ^ b] += table.sign(a, b) * ca * cb;
    }
  }
  return out;
}

Multivector Multivector::operator*(double s) const {
  Multivector out(n_);
  out.coeffs() = coeffs_ * s;
  return out;
}

Multivector Multivector::conjugate() const {
  const BladeTable& table = BladeTable::for_dimension(n_);
  Multivector out(n_);
  for (int b = 0; b < blade_count(); ++b)
    out.coeffs()[b] = table.conjugation_sign(b) * coeffs_[b];
  return out;
}

Multivector Multivector::nonscalar_part() const {
  Multivector out = *this;
  out[0] = 0.0;
  return out;
}

Eigen::VectorXd Multivector::vector_part() const {
  Eigen::VectorXd out(n_);
  for (int i = 0; i < n_; ++i) out[i] = coeffs_[1u << i];
  return out;
}

double scalar_inner(const Multivector& a, const Multivector& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("scalar_inner: dimension mismatch");
  return a.coeffs().dot(b.coeffs());
}

}  // namespace vekua

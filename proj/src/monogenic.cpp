#include "vekua/monogenic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace vekua {

PolyMultivector PolyMultivector::constant(int clifford_dim, int variables,
                                          const Multivector& value) {
  PolyMultivector out(clifford_dim, variables);
  out.add_term(Exponents(variables, 0), value);
  return out;
}

PolyMultivector PolyMultivector::coordinate(int clifford_dim, int variables, int axis,
                                            double shift) {
  if (axis < 0 || axis >= variables)
    throw std::invalid_argument("PolyMultivector::coordinate: axis out of range");
  PolyMultivector out(clifford_dim, variables);
  Exponents e(variables, 0);
  e[axis] = 1;
  out.add_term(e, Multivector::scalar(clifford_dim, 1.0));
  if (shift != 0.0)
    out.add_term(Exponents(variables, 0), Multivector::scalar(clifford_dim, -shift));
  return out;
}

void PolyMultivector::add_term(const Exponents& exp, const Multivector& coeff) {
  if (static_cast<int>(exp.size()) != vars_)
    throw std::invalid_argument("PolyMultivector::add_term: exponent arity mismatch");
  auto it = terms_.find(exp);
  if (it == terms_.end())
    terms_.emplace(exp, coeff);
  else
    it->second += coeff;
}

PolyMultivector PolyMultivector::operator+(const PolyMultivector& rhs) const {
  PolyMultivector out = *this;
  for (const auto& [exp, coeff] : rhs.terms_) out.add_term(exp, coeff);
  return out;
}

PolyMultivector PolyMultivector::operator*(const PolyMultivector& rhs) const {
  PolyMultivector out(n_, vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(vars_);
      for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

PolyMultivector PolyMultivector::operator*(double s) const {
  PolyMultivector out(n_, vars_);
  for (const auto& [exp, coeff] : terms_) out.add_term(exp, coeff * s);
  return out;
}

PolyMultivector PolyMultivector::left_multiplied(const Multivector& c) const {
  PolyMultivector out(n_, vars_);
  for (const auto& [exp, coeff] : terms_) out.add_term(exp, c * coeff);
  return out;
}

PolyMultivector PolyMultivector::derivative(int axis) const {
  PolyMultivector out(n_, vars_);
  for (const auto& [exp, coeff] : terms_) {
    if (exp[axis] == 0) continue;
    Exponents e = exp;
    e[axis] -= 1;
    out.add_term(e, coeff * static_cast<double>(exp[axis]));
  }
  return out;
}

int PolyMultivector::total_degree() const {
  int deg = -1;
  for (const auto& [exp, coeff] : terms_) {
    if (coeff.norm() == 0.0) continue;
    int d = 0;
    for (int e : exp) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

Multivector PolyMultivector::evaluate(const Eigen::VectorXd& x) const {
  if (x.size() < vars_)
    throw std::invalid_argument("PolyMultivector::evaluate: point arity mismatch");
  Multivector acc(n_);
  for (const auto& [exp, coeff] : terms_) {
    double mono = 1.0;
    for (int i = 0; i < vars_; ++i)
      for (int k = 0; k < exp[i]; ++k) mono *= x[i];
    acc += coeff * mono;
  }
  return acc;
}

PolyMultivector PolyMultivector::dirac() const {
  PolyMultivector out(n_, vars_);
  for (int axis = 0; axis < std::min(vars_, n_); ++axis) {
    const PolyMultivector d = derivative(axis);
    const Multivector e = Multivector::unit(n_, 1u << axis);
    for (const auto& [exp, coeff] : d.terms_) out.add_term(exp, e * coeff);
  }
  return out;
}

PolyMultivector ck_extension(const PolyMultivector& w0, double center_last) {
  const int n = w0.clifford_dimension();
  if (w0.variables() != n)
    throw std::invalid_argument("ck_extension: seed must use n variables (last unused)");
  const Multivector en = Multivector::unit(n, 1u << (n - 1));

  // E~ w = e_n sum_{i<n} e_i d_i w; the series terminates at the seed degree.
  auto tilde = [&](const PolyMultivector& w) {
    PolyMultivector out(n, n);
    for (int i = 0; i + 1 < n; ++i) {
      const PolyMultivector d = w.derivative(i);
      const Multivector factor = en * Multivector::unit(n, 1u << i);
      out = out + d.left_multiplied(factor);
    }
    return out;
  };

  PolyMultivector xn = PolyMultivector::coordinate(n, n, n - 1, center_last);
  PolyMultivector result = w0;
  PolyMultivector power = PolyMultivector::constant(n, n, Multivector::scalar(n, 1.0));
  PolyMultivector current = w0;
  double factorial = 1.0;
  for (int k = 1; k <= std::max(w0.total_degree(), 0); ++k) {
    current = tilde(current);
    if (current.empty() || current.total_degree() < 0) break;
    power = power * xn;
    factorial *= k;
    result = result + (power * current) * (1.0 / factorial);
  }
  return result;
}

std::vector<PolyMultivector> monogenic_polynomials(const GridDomain& grid,
                                                   int max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("monogenic_polynomials: max_degree >= 0 required");
  const int n = grid.dimension();
  const int nb = 1 << n;
  std::vector<double> center(n);
  for (int i = 0; i < n; ++i)
    center[i] = 0.5 * (grid.box()[i][0] + grid.box()[i][1]);

  // monomials (x' - c')^gamma over the first n-1 coordinates, by degree
  std::vector<std::vector<int>> exps;
  std::vector<int> stack(n - 1 > 0 ? n - 1 : 0, 0);
  std::function<void(int, int)> emit = [&](int axis, int remaining) {
    if (axis == n - 1) {
      exps.push_back(stack);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      stack[axis] = e;
      emit(axis + 1, remaining - e);
    }
    stack[axis] = 0;
  };
  std::vector<std::vector<int>> ordered;
  for (int d = 0; d <= max_degree; ++d) {
    exps.clear();
    if (n == 1) {
      if (d == 0) exps.push_back({});
    } else {
      emit(0, d);
    }
    for (auto& e : exps) {
      int total = 0;
      for (int v : e) total += v;
      if (total == d) ordered.push_back(e);
    }
  }

  std::vector<PolyMultivector> out;
  for (const auto& exp : ordered) {
    PolyMultivector mono = PolyMultivector::constant(n, n, Multivector::scalar(n, 1.0));
    for (int i = 0; i + 1 < n; ++i)
      for (int k = 0; k < exp[i]; ++k)
        mono = mono * PolyMultivector::coordinate(n, n, i, center[i]);
    for (int b = 0; b < nb; ++b) {
      PolyMultivector seed(n, n);
      for (const auto& [e, c] : mono.terms())
        seed.add_term(e, c * Multivector::unit(n, b));
      out.push_back(ck_extension(seed, center[n - 1]));
    }
  }
  return out;
}

Field sample_poly(const PolyMultivector& poly, std::shared_ptr<const GridDomain> grid) {
  Field out(grid);
  for (Field::Index p = 0; p < grid->point_count(); ++p)
    out.set(p, poly.evaluate(grid->point(p)));
  return out;
}

std::vector<Field> monogenic_candidates(std::shared_ptr<const GridDomain> grid,
                                        int max_degree) {
  std::vector<Field> out;
  for (const PolyMultivector& poly : monogenic_polynomials(*grid, max_degree))
    out.push_back(sample_poly(poly, grid));
  return out;
}

}  // namespace vekua

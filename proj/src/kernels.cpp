#include "vekua/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace vekua {

namespace {

using Index = GridDomain::Index;

void check_point(const OrthonormalSystem& basis, Index p, const char* where) {
  if (basis.members.empty()) throw std::invalid_argument(std::string(where) + ": empty basis");
  if (p < 0 || p >= basis.members.front().grid().point_count())
    throw std::invalid_argument(std::string(where) + ": point index off the grid");
}

}  // namespace

Multivector kernel_eval(const OrthonormalSystem& basis, unsigned blade_a, Index x,
                        Index y) {
  check_point(basis, x, "kernel_eval");
  check_point(basis, y, "kernel_eval");
  const int n = basis.members.front().dimension();
  Multivector acc(n);
  for (const Field& e : basis.members) acc += e.at(y) * e.coeff(x, blade_a);
  return acc;
}

Field kernel_slice(const OrthonormalSystem& basis, unsigned blade_a, Index x) {
  check_point(basis, x, "kernel_slice");
  Field out(basis.members.front().grid_ptr());
  for (const Field& e : basis.members) out += e * e.coeff(x, blade_a);
  return out;
}

double reproduce_component(const Field& w, unsigned blade_a, Index x,
                           const OrthonormalSystem& basis) {
  check_point(basis, x, "reproduce_component");
  double acc = 0.0;
  for (const Field& e : basis.members) acc += e.coeff(x, blade_a) * scalar_product(e, w);
  return acc;
}

double kernel_symmetry_residual(const OrthonormalSystem& basis, unsigned blade_a,
                                unsigned blade_b, int sample_pairs,
                                std::mt19937_64& rng) {
  if (basis.members.empty())
    throw std::invalid_argument("kernel_symmetry_residual: empty basis");
  const Index count = basis.members.front().grid().point_count();
  std::uniform_int_distribution<Index> pick(0, count - 1);
  double worst = 0.0;
  for (int s = 0; s < sample_pairs; ++s) {
    const Index x = pick(rng), y = pick(rng);
    const double ab = kernel_eval(basis, blade_a, x, y)[blade_b];
    const double ba = kernel_eval(basis, blade_b, y, x)[blade_a];
    worst = std::max(worst, std::abs(ab - ba));
  }
  return worst;
}

Field kernel_projection(const Field& w, const OrthonormalSystem& basis) {
  if (basis.members.empty())
    throw std::invalid_argument("kernel_projection: empty basis");
  check_same_grid(w, basis.members.front(), "kernel_projection");
  const GridDomain& g = w.grid();
  const int n = w.dimension();
  const int nb = w.blade_count();
  const BladeTable& table = BladeTable::for_dimension(n);

  // combined weight (-1)^{|B|(|B|+1)/2} e_B^2, kept in the literal two-factor
  // form (it evaluates to +1 for every blade)
  Eigen::VectorXd blade_factor(nb);
  for (int b = 0; b < nb; ++b) {
    const Multivector eb = Multivector::unit(n, b);
    blade_factor[b] = table.conjugation_sign(b) * (eb * eb).scalar_part();
  }

  // P[w](x) = sum_B c_B sum_k [e_k(x)]_B m_{k,B},
  // m_{k,B} = sum_y wt(y) w_B(y) e_k(y)
  const int K = basis.size();
  std::vector<Multivector> moments;
  moments.reserve(K * nb);
  for (int k = 0; k < K; ++k) {
    const Field& e = basis.members[k];
    for (int b = 0; b < nb; ++b) {
      Multivector m(n);
      for (Index y = 0; y < g.point_count(); ++y)
        m += e.at(y) * (g.weight(y) * w.coeff(y, b));
      moments.push_back(m);
    }
  }
  Field out(w.grid_ptr());
  for (Index x = 0; x < g.point_count(); ++x) {
    Multivector acc(n);
    for (int k = 0; k < K; ++k)
      for (int b = 0; b < nb; ++b)
        acc += moments[k * nb + b] *
               (blade_factor[b] * basis.members[k].coeff(x, b));
    out.set(x, acc);
  }
  return out;
}

Eigen::MatrixXd kernel_component_table(const OrthonormalSystem& basis,
                                       unsigned blade_a, unsigned blade_b,
                                       std::size_t memory_cap_bytes) {
  if (basis.members.empty())
    throw std::invalid_argument("kernel_component_table: empty basis");
  const Index count = basis.members.front().grid().point_count();
  const std::size_t bytes = sizeof(double) * static_cast<std::size_t>(count) * count;
  if (bytes > memory_cap_bytes)
    throw std::invalid_argument("kernel_component_table: " + std::to_string(bytes) +
                                " bytes exceeds the cap");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(count, count);
  for (const Field& e : basis.members) {
    Eigen::VectorXd xa(count), yb(count);
    for (Index p = 0; p < count; ++p) {
      xa[p] = e.coeff(p, blade_a);
      yb[p] = e.coeff(p, blade_b);
    }
    out += xa * yb.transpose();
  }
  return out;
}

OrthonormalSystem scaled_monogenic_basis(const Field& g_scalar,
                                         const OrthonormalSystem& monogenic,
                                         const BasisOptions& opts) {
  std::vector<Field> candidates;
  candidates.reserve(monogenic.members.size());
  for (const Field& m : monogenic.members)
    candidates.push_back(scale_by_scalar_field(g_scalar, m));
  // defining residual: the conductivity-type equation D w = (grad g / g) w
  const Field beta = gradient_of_scalar([&] {
    Field lg(g_scalar.grid_ptr());
    for (Field::Index p = 0; p < g_scalar.grid().point_count(); ++p)
      lg.coeff(p, 0) = std::log(g_scalar.coeff(p, 0));
    return lg;
  }());
  const int layers = g_scalar.grid().margin_layers(0.1);
  auto residual = [&](const Field& v) {
    const Field r = dirac_apply(v) - pointwise_product(beta, v);
    return interior_relative(r, v, layers);
  };
  return orthonormalize(candidates, residual, opts, "scaled monogenic members");
}

}  // namespace vekua

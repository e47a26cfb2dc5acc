#include "vekua/diffops.hpp"

#include <stdexcept>

namespace vekua {

namespace {

using Index = Field::Index;

/// Stride between lattice neighbors along `axis` in flat point-major order.
Index axis_stride(const GridDomain& g, int axis) {
  Index s = 1;
  for (int i = g.dimension() - 1; i > axis; --i) s *= g.points_per_axis();
  return s;
}

}  // namespace

Field partial_derivative(const Field& u, int axis) {
  const GridDomain& g = u.grid();
  if (axis < 0 || axis >= g.dimension())
    throw std::invalid_argument("partial_derivative: axis out of range");
  if (g.points_per_axis() < 3)
    throw std::invalid_argument("partial_derivative: need m >= 3");

  const int m = g.points_per_axis();
  const int nb = u.blade_count();
  const Index stride = axis_stride(g, axis) * nb;
  const double h = g.spacing(axis);
  Field out(u.grid_ptr());

  for (Index p = 0; p < g.point_count(); ++p) {
    const int i = g.axis_index(p, axis);
    const Index base = p * nb;
    for (int b = 0; b < nb; ++b) {
      const Index k = base + b;
      double d;
      if (i == 0)
        d = (-3.0 * u.flat()[k] + 4.0 * u.flat()[k + stride] - u.flat()[k + 2 * stride]) /
            (2.0 * h);
      else if (i == m - 1)
        d = (3.0 * u.flat()[k] - 4.0 * u.flat()[k - stride] + u.flat()[k - 2 * stride]) /
            (2.0 * h);
      else
        d = (u.flat()[k + stride] - u.flat()[k - stride]) / (2.0 * h);
      out.flat()[k] = d;
    }
  }
  return out;
}

Field dirac_apply(const Field& w) {
  const GridDomain& g = w.grid();
  const int n = g.dimension();
  Field out(w.grid_ptr());
  for (int axis = 0; axis < n; ++axis) {
    const Field d = partial_derivative(w, axis);
    out += left_multiply(Multivector::unit(n, 1u << axis), d);
  }
  return out;
}

Field dirac_right_apply(const Field& w) {
  const GridDomain& g = w.grid();
  const int n = g.dimension();
  Field out(w.grid_ptr());
  for (int axis = 0; axis < n; ++axis) {
    const Field d = partial_derivative(w, axis);
    out += right_multiply(d, Multivector::unit(n, 1u << axis));
  }
  return out;
}

Field laplacian(const Field& u) {
  const GridDomain& g = u.grid();
  const int m = g.points_per_axis();
  const int nb = u.blade_count();
  Field out(u.grid_ptr());

  for (int axis = 0; axis < g.dimension(); ++axis) {
    const Index stride = axis_stride(g, axis) * nb;
    const double h2 = g.spacing(axis) * g.spacing(axis);
    for (Index p = 0; p < g.point_count(); ++p) {
      const int i = g.axis_index(p, axis);
      const Index base = p * nb;
      for (int b = 0; b < nb; ++b) {
        const Index k = base + b;
        double d;
        if (i >= 1 && i <= m - 2) {
          d = (u.flat()[k + stride] - 2.0 * u.flat()[k] + u.flat()[k - stride]) / h2;
        } else if (i == 0) {
          d = (m >= 4) ? (2.0 * u.flat()[k] - 5.0 * u.flat()[k + stride] +
                          4.0 * u.flat()[k + 2 * stride] - u.flat()[k + 3 * stride]) /
                             h2
                       : (u.flat()[k] - 2.0 * u.flat()[k + stride] +
                          u.flat()[k + 2 * stride]) /
                             h2;
        } else {
          d = (m >= 4) ? (2.0 * u.flat()[k] - 5.0 * u.flat()[k - stride] +
                          4.0 * u.flat()[k - 2 * stride] - u.flat()[k - 3 * stride]) /
                             h2
                       : (u.flat()[k] - 2.0 * u.flat()[k - stride] +
                          u.flat()[k - 2 * stride]) /
                             h2;
        }
        out.flat()[k] += d;
      }
    }
  }
  return out;
}

Field gradient_of_scalar(const Field& u) {
  const GridDomain& g = u.grid();
  const int n = g.dimension();
  Field out(u.grid_ptr());
  const Field s = u.component(0);
  for (int axis = 0; axis < n; ++axis) {
    const Field d = partial_derivative(s, axis);
    for (Index p = 0; p < g.point_count(); ++p)
      out.coeff(p, 1u << axis) = d.coeff(p, 0);
  }
  return out;
}

Field divergence_of_vector(const Field& u) {
  const GridDomain& g = u.grid();
  Field out(u.grid_ptr());
  for (int axis = 0; axis < g.dimension(); ++axis) {
    const Field d = partial_derivative(u.component(1u << axis), axis);
    for (Index p = 0; p < g.point_count(); ++p) out.coeff(p, 0) += d.coeff(p, 0);
  }
  return out;
}

}  // namespace vekua

#include "vekua/problem.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vekua {

namespace {

void check_positive_scalar(const Field& f, const char* name) {
  for (Field::Index p = 0; p < f.grid().point_count(); ++p)
    if (!(f.coeff(p, 0) > 0.0)) {
      std::ostringstream msg;
      msg << name << " must be positive; value " << f.coeff(p, 0) << " at point ("
          << f.grid().point(p).transpose() << ")";
      throw std::domain_error(msg.str());
    }
}

Field log_of_scalar(const Field& f) {
  Field out(f.grid_ptr());
  for (Field::Index p = 0; p < f.grid().point_count(); ++p)
    out.coeff(p, 0) = std::log(f.coeff(p, 0));
  return out;
}

Field reciprocal_scalar(const Field& f) {
  Field out(f.grid_ptr());
  for (Field::Index p = 0; p < f.grid().point_count(); ++p)
    out.coeff(p, 0) = 1.0 / f.coeff(p, 0);
  return out;
}

}  // namespace

VekuaProblem VekuaProblem::from_fields(Field alpha, Field beta) {
  check_same_grid(alpha, beta, "VekuaProblem");
  auto grid = alpha.grid_ptr();
  return VekuaProblem{grid, std::move(alpha), std::move(beta), std::nullopt, std::nullopt};
}

VekuaProblem VekuaProblem::from_fg(const Field& f, const Field& g) {
  check_same_grid(f, g, "VekuaProblem::from_fg");
  check_positive_scalar(f, "f");
  check_positive_scalar(g, "g");
  // grad f / f computed as grad(log f); exact for exponentials of polynomials
  // up to the stencil degree and better conditioned for strongly varying f.
  Field alpha = gradient_of_scalar(log_of_scalar(f));
  Field beta = gradient_of_scalar(log_of_scalar(g));
  VekuaProblem prob{f.grid_ptr(), std::move(alpha), std::move(beta), f, g};
  return prob;
}

VekuaProblem VekuaProblem::zero(std::shared_ptr<const GridDomain> grid) {
  Field z(grid);
  return VekuaProblem{grid, z, z, std::nullopt, std::nullopt};
}

double interior_relative(const Field& num, const Field& den, int layers) {
  const double d = interior_norm0(den, layers);
  return interior_norm0(num, layers) / std::max(d, 1e-300);
}

Field vekua_coupling(const Field& w, const VekuaProblem& prob) {
  return pointwise_product(prob.alpha, conjugate(w)) + pointwise_product(prob.beta, w);
}

Field adjoint_vekua_coupling(const Field& w, const VekuaProblem& prob) {
  return pointwise_product(conjugate(w), prob.alpha) +
         pointwise_product(conjugate(prob.beta), w);
}

Field vekua_operator_apply(const Field& w, const VekuaProblem& prob) {
  check_same_grid(w, prob.alpha, "vekua_operator_apply");
  return dirac_apply(w) - vekua_coupling(w, prob);
}

Field adjoint_vekua_operator_apply(const Field& w, const VekuaProblem& prob) {
  check_same_grid(w, prob.alpha, "adjoint_vekua_operator_apply");
  return dirac_apply(w) - adjoint_vekua_coupling(w, prob);
}

RealLinearOperator assemble_vekua_operator(const VekuaProblem& prob) {
  RealLinearOperator d = assemble_dirac(prob.grid);
  RealLinearOperator ac = compose(assemble_left_mult(prob.alpha),
                                  assemble_conjugation(prob.grid));
  RealLinearOperator out = subtract(subtract(d, ac), assemble_left_mult(prob.beta));
  out.label = "D-aC-b";
  return out;
}

RealLinearOperator assemble_adjoint_vekua_operator(const VekuaProblem& prob) {
  RealLinearOperator d = assemble_dirac(prob.grid);
  RealLinearOperator mc = compose(assemble_right_mult(prob.alpha),
                                  assemble_conjugation(prob.grid));
  RealLinearOperator out =
      subtract(subtract(d, mc), assemble_left_mult(conjugate(prob.beta)));
  out.label = "D-MaC-cb";
  return out;
}

Field s_apply(const Field& w, const VekuaProblem& prob) {
  check_same_grid(w, prob.alpha, "s_apply");
  return w - teodorescu_apply(vekua_coupling(w, prob));
}

Field s_adjoint_apply(const Field& w, const VekuaProblem& prob) {
  check_same_grid(w, prob.alpha, "s_adjoint_apply");
  return w - teodorescu_apply(adjoint_vekua_coupling(w, prob));
}

RealLinearOperator assemble_s(const VekuaProblem& prob) {
  RealLinearOperator t = assemble_teodorescu(prob.grid);
  RealLinearOperator ac = compose(assemble_left_mult(prob.alpha),
                                  assemble_conjugation(prob.grid));
  RealLinearOperator g = add(ac, assemble_left_mult(prob.beta));
  RealLinearOperator out = subtract(identity_operator(prob.grid), compose(t, g));
  out.label = "S";
  return out;
}

namespace {

Field neumann_iterate(const Field& v, const VekuaProblem& prob, bool mirrored,
                      const NeumannOptions& opts, NeumannStats* stats) {
  check_same_grid(v, prob.alpha, "s_inverse_apply");
  const double q = prob.contraction_bound();
  if (q >= 1.0 && !opts.override_contraction) {
    std::ostringstream msg;
    msg << "s_inverse_apply: contraction bound q = " << q
        << " >= 1; the Neumann series may diverge (set override_contraction to proceed)";
    throw std::invalid_argument(msg.str());
  }

  const double nv = norm0(v);
  if (nv == 0.0) {
    if (stats) *stats = {1, 0.0, 0.0};
    return v;
  }

  Field w = v;
  double prev_update = 0.0;
  double log_ratio_sum = 0.0;
  int ratio_count = 0;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    const Field coupled = mirrored ? adjoint_vekua_coupling(w, prob)
                                   : vekua_coupling(w, prob);
    Field next = v + teodorescu_apply(coupled);
    const double update = norm0(next - w) / nv;
    w = std::move(next);
    if (prev_update > 0.0 && update > 0.0) {
      log_ratio_sum += std::log(update / prev_update);
      ++ratio_count;
    }
    prev_update = update;
    if (update <= opts.tolerance) {
      if (stats)
        *stats = {it, update,
                  ratio_count > 0 ? std::exp(log_ratio_sum / ratio_count) : 0.0};
      return w;
    }
  }
  std::ostringstream msg;
  msg << "s_inverse_apply: no convergence in " << opts.max_iterations
      << " iterations; last relative update " << prev_update;
  throw std::runtime_error(msg.str());
}

}  // namespace

Field s_inverse_apply(const Field& v, const VekuaProblem& prob,
                      const NeumannOptions& opts, NeumannStats* stats) {
  return neumann_iterate(v, prob, false, opts, stats);
}

Field s_adjoint_inverse_apply(const Field& v, const VekuaProblem& prob,
                              const NeumannOptions& opts, NeumannStats* stats) {
  return neumann_iterate(v, prob, true, opts, stats);
}

Field make_vekua_solution(const Field& g_monogenic, const VekuaProblem& prob,
                          const NeumannOptions& opts) {
  return s_inverse_apply(g_monogenic, prob, opts);
}

double vekua_residual(const Field& w, const VekuaProblem& prob, int margin_layers) {
  return interior_relative(vekua_operator_apply(w, prob), w, margin_layers);
}

double vekua_residual(const Field& w, const VekuaProblem& prob) {
  return vekua_residual(w, prob, prob.margin_layers());
}

double adjoint_vekua_residual(const Field& w, const VekuaProblem& prob) {
  return interior_relative(adjoint_vekua_operator_apply(w, prob), w,
                           prob.margin_layers());
}

Field beltrami_transform(const Field& w, const Field& f, const Field& g) {
  check_same_grid(w, f, "beltrami_transform");
  check_same_grid(w, g, "beltrami_transform");
  check_positive_scalar(f, "f");
  check_positive_scalar(g, "g");
  Field u(w.grid_ptr());
  for (Field::Index p = 0; p < w.grid().point_count(); ++p) {
    const double fv = f.coeff(p, 0), gv = g.coeff(p, 0);
    Multivector value = w.at(p).nonscalar_part() * (fv / gv);
    value[0] = w.coeff(p, 0) / (fv * gv);
    u.set(p, value);
  }
  return u;
}

double beltrami_residual(const Field& u, const Field& f, double margin_fraction) {
  check_same_grid(u, f, "beltrami_residual");
  check_positive_scalar(f, "f");
  Field mu(u.grid_ptr());
  for (Field::Index p = 0; p < u.grid().point_count(); ++p) {
    const double fv = f.coeff(p, 0);
    mu.coeff(p, 0) = (1.0 - fv * fv) / (1.0 + fv * fv);
  }
  const Field res = dirac_apply(u) - scale_by_scalar_field(mu, dirac_apply(conjugate(u)));
  return interior_relative(res, u, u.grid().margin_layers(margin_fraction));
}

double conductivity_residual(const Field& w, const Field& f, const Field& g,
                             double margin_fraction) {
  check_same_grid(w, f, "conductivity_residual");
  check_same_grid(w, g, "conductivity_residual");
  check_positive_scalar(f, "f");
  check_positive_scalar(g, "g");
  Field s(w.grid_ptr());
  Field f2(w.grid_ptr());
  for (Field::Index p = 0; p < w.grid().point_count(); ++p) {
    const double fv = f.coeff(p, 0);
    s.coeff(p, 0) = w.coeff(p, 0) / (fv * g.coeff(p, 0));
    f2.coeff(p, 0) = fv * fv;
  }
  Field flux(w.grid_ptr());
  for (int axis = 0; axis < w.dimension(); ++axis) {
    const Field ds = partial_derivative(s, axis);
    for (Field::Index p = 0; p < w.grid().point_count(); ++p)
      flux.coeff(p, 1u << axis) = f2.coeff(p, 0) * ds.coeff(p, 0);
  }
  const Field div = divergence_of_vector(flux);
  return interior_relative(div, w.component(0),
                           w.grid().margin_layers(margin_fraction));
}

double schrodinger_residual(const Field& w, const Field& f, const Field& g,
                            double margin_fraction) {
  check_same_grid(w, f, "schrodinger_residual");
  check_same_grid(w, g, "schrodinger_residual");
  check_positive_scalar(f, "f");
  check_positive_scalar(g, "g");
  Field t(w.grid_ptr());
  for (Field::Index p = 0; p < w.grid().point_count(); ++p)
    t.coeff(p, 0) = w.coeff(p, 0) / g.coeff(p, 0);
  const Field lap_t = laplacian(t);
  const Field lap_f = laplacian(f.component(0));
  Field res(w.grid_ptr());
  for (Field::Index p = 0; p < w.grid().point_count(); ++p)
    res.coeff(p, 0) =
        lap_t.coeff(p, 0) - lap_f.coeff(p, 0) / f.coeff(p, 0) * t.coeff(p, 0);
  return interior_relative(res, w.component(0),
                           w.grid().margin_layers(margin_fraction));
}

}  // namespace vekua

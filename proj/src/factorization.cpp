#include "vekua/factorization.hpp"

#include <cmath>
#include <stdexcept>

namespace vekua {

namespace {

using Index = Field::Index;

Field coefficient_dot(const Field& a, const Field& b) {
  check_same_grid(a, b, "coefficient_dot");
  Field out(a.grid_ptr());
  const int nb = a.blade_count();
  for (Index p = 0; p < a.grid().point_count(); ++p) {
    double acc = 0.0;
    for (int k = 0; k < nb; ++k) acc += a.coeff(p, k) * b.coeff(p, k);
    out.coeff(p, 0) = acc;
  }
  return out;
}

PotentialSpec derive(VekuaProblem prob) {
  const Field& alpha = prob.alpha;
  const Field& beta = prob.beta;
  PotentialSpec spec{prob,
                     coefficient_dot(alpha, alpha),
                     coefficient_dot(beta, beta),
                     divergence_of_vector(alpha),
                     divergence_of_vector(beta),
                     coefficient_dot(alpha, conjugate(beta)),
                     coefficient_dot(alpha, beta)};
  return spec;
}

void require_scalar(const Field& h0, const char* where) {
  for (Index p = 0; p < h0.grid().point_count(); ++p)
    for (int b = 1; b < h0.blade_count(); ++b)
      if (h0.coeff(p, b) != 0.0)
        throw std::invalid_argument(std::string(where) + ": field must be scalar");
}

}  // namespace

PotentialSpec potential_from_fields(const Field& alpha, const Field& beta) {
  return derive(VekuaProblem::from_fields(alpha, beta));
}

PotentialSpec potential_from_fg(const Field& f, const Field& g) {
  return derive(VekuaProblem::from_fg(f, g));
}

double factorization_residual(const Field& h0, const PotentialSpec& spec,
                              FactorOrder order) {
  require_scalar(h0, "factorization_residual");
  const VekuaProblem& prob = spec.problem;
  check_same_grid(h0, prob.alpha, "factorization_residual");

  // stencil route for the second-order scalar form
  const Field lap = laplacian(h0.component(0));
  Field lhs(h0.grid_ptr());
  for (Index p = 0; p < h0.grid().point_count(); ++p) {
    const double divs = order == FactorOrder::forward
                            ? spec.div_alpha.coeff(p, 0) - spec.div_beta.coeff(p, 0)
                            : spec.div_alpha.coeff(p, 0) + spec.div_beta.coeff(p, 0);
    const double dot = order == FactorOrder::forward
                           ? spec.alpha_dot_conj_beta.coeff(p, 0)
                           : spec.alpha_dot_beta.coeff(p, 0);
    lhs.coeff(p, 0) = -lap.coeff(p, 0) +
                      (spec.alpha_sq.coeff(p, 0) + spec.beta_sq.coeff(p, 0) + divs +
                       2.0 * dot) *
                          h0.coeff(p, 0);
  }

  // operator route: composed assembled factors
  const RealLinearOperator vek = assemble_vekua_operator(prob);
  const RealLinearOperator adj = assemble_adjoint_vekua_operator(prob);
  const Field inner = order == FactorOrder::forward ? adj.apply(h0) : vek.apply(h0);
  const Field outer = order == FactorOrder::forward ? vek.apply(inner) : adj.apply(inner);
  const Field rhs = outer.component(0);

  return interior_relative(lhs - rhs, h0, prob.margin_layers());
}

double factorization_residual_fg_form(const Field& h0, const PotentialSpec& spec) {
  require_scalar(h0, "factorization_residual_fg_form");
  if (!spec.problem.f || !spec.problem.g)
    throw std::invalid_argument("factorization_residual_fg_form: needs f,g provenance");
  const Field& f = *spec.problem.f;
  const Field& g = *spec.problem.g;
  const Field lap = laplacian(h0.component(0));
  const Field lap_f = laplacian(f.component(0));
  const Field lap_g = laplacian(g.component(0));

  Field lhs(h0.grid_ptr());
  const Field& beta = spec.problem.beta;   // grad g / g
  const Field& alpha = spec.problem.alpha;  // grad f / f
  for (Index p = 0; p < h0.grid().point_count(); ++p) {
    double bdotba = 0.0;
    for (int b = 0; b < h0.blade_count(); ++b)
      bdotba += beta.coeff(p, b) * (beta.coeff(p, b) - alpha.coeff(p, b));
    lhs.coeff(p, 0) =
        -lap.coeff(p, 0) + (lap_f.coeff(p, 0) / f.coeff(p, 0) -
                            lap_g.coeff(p, 0) / g.coeff(p, 0) + 2.0 * bdotba) *
                               h0.coeff(p, 0);
  }

  const RealLinearOperator vek = assemble_vekua_operator(spec.problem);
  const RealLinearOperator adj = assemble_adjoint_vekua_operator(spec.problem);
  const Field rhs = vek.apply(adj.apply(h0)).component(0);
  return interior_relative(lhs - rhs, h0, spec.problem.margin_layers());
}

double full_factorization_residual(const Field& h, const PotentialSpec& spec) {
  const VekuaProblem& prob = spec.problem;
  check_same_grid(h, prob.alpha, "full_factorization_residual");
  const Field& alpha = prob.alpha;
  const Field& beta = prob.beta;
  const Field ch = conjugate(h);

  // term-by-term stencil route, following the displayed expansion
  const Field term_lap = -laplacian(h);
  const Field term_dha = -dirac_apply(pointwise_product(ch, alpha));
  const Field term_dbh = -dirac_apply(pointwise_product(conjugate(beta), h));
  const Field inner_alpha =
      dirac_right_apply(ch) + pointwise_product(conjugate(alpha), h) +
      pointwise_product(ch, beta);
  const Field term_alpha = pointwise_product(alpha, inner_alpha);
  const Field inner_beta = dirac_apply(h) - pointwise_product(ch, alpha) -
                           pointwise_product(conjugate(beta), h);
  const Field term_beta = -pointwise_product(beta, inner_beta);
  const Field expansion = term_lap + term_dha + term_dbh + term_alpha + term_beta;

  const RealLinearOperator vek = assemble_vekua_operator(prob);
  const RealLinearOperator adj = assemble_adjoint_vekua_operator(prob);
  const Field composed = vek.apply(adj.apply(h));

  return interior_relative(expansion - composed, h, prob.margin_layers());
}

double potential_difference_defect(const PotentialSpec& spec) {
  double worst = 0.0;
  for (Index p = 0; p < spec.alpha_sq.grid().point_count(); ++p) {
    const double forward =
        spec.div_alpha.coeff(p, 0) - spec.div_beta.coeff(p, 0) +
        2.0 * spec.alpha_dot_conj_beta.coeff(p, 0);
    const double adjoint_v = spec.div_alpha.coeff(p, 0) + spec.div_beta.coeff(p, 0) +
                             2.0 * spec.alpha_dot_beta.coeff(p, 0);
    const double closed = -2.0 * spec.div_beta.coeff(p, 0) +
                          2.0 * spec.alpha_dot_conj_beta.coeff(p, 0) -
                          2.0 * spec.alpha_dot_beta.coeff(p, 0);
    worst = std::max(worst, std::abs((forward - adjoint_v) - closed));
  }
  return worst;
}

}  // namespace vekua

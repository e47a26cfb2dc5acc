#include "vekua/hodge.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vekua {

double OrthonormalSystem::max_residual() const {
  double r = 0.0;
  for (double v : residuals) r = std::max(r, v);
  return r;
}

double OrthonormalSystem::gram_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j) {
      const double g = scalar_product(members[i], members[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

OrthonormalSystem orthonormalize(const std::vector<Field>& candidates,
                                 const std::function<double(const Field&)>& residual,
                                 const BasisOptions& opts, std::string provenance) {
  OrthonormalSystem out;
  out.provenance = std::move(provenance);
  for (const Field& candidate : candidates) {
    Field v = candidate;
    const double original = norm0(v);
    if (original == 0.0) {
      ++out.dropped;
      continue;
    }
    for (int pass = 0; pass < 2; ++pass)
      for (const Field& e : out.members) v -= e * scalar_product(e, v);
    const double remaining = norm0(v);
    if (remaining <= opts.dependence_tolerance * original) {
      ++out.dropped;
      continue;
    }
    v *= 1.0 / remaining;
    const double r = residual(v);
    if (r > opts.build_tolerance) {
      ++out.dropped;
      continue;
    }
    out.members.push_back(std::move(v));
    out.residuals.push_back(r);
  }
  if (out.members.empty())
    throw std::runtime_error("orthonormalize: no candidate survived (" +
                             out.provenance + ")");
  return out;
}

OrthonormalSystem build_monogenic_basis(std::shared_ptr<const GridDomain> grid,
                                        int max_degree, const BasisOptions& opts) {
  const std::vector<Field> candidates = monogenic_candidates(grid, max_degree);
  const int layers = grid->margin_layers(0.1);
  auto residual = [layers](const Field& v) {
    return interior_relative(dirac_apply(v), v, layers);
  };
  std::ostringstream tag;
  tag << "monogenic polynomials, degree <= " << max_degree;
  return orthonormalize(candidates, residual, opts, tag.str());
}

OrthonormalSystem build_vekua_basis(const VekuaProblem& prob,
                                    const OrthonormalSystem& monogenic,
                                    const BasisOptions& opts,
                                    const std::function<Field(const Field&)>& solve) {
  std::vector<Field> candidates;
  candidates.reserve(monogenic.members.size());
  for (const Field& m : monogenic.members)
    candidates.push_back(solve ? solve(m) : s_inverse_apply(m, prob));
  auto residual = [&prob](const Field& v) { return vekua_residual(v, prob); };
  return orthonormalize(candidates, residual, opts,
                        "inverse-isomorphism images of " + monogenic.provenance);
}

OrthonormalSystem build_adjoint_vekua_basis(const VekuaProblem& prob,
                                            const OrthonormalSystem& monogenic,
                                            const BasisOptions& opts) {
  std::vector<Field> candidates;
  candidates.reserve(monogenic.members.size());
  for (const Field& m : monogenic.members)
    candidates.push_back(s_adjoint_inverse_apply(m, prob));
  auto residual = [&prob](const Field& v) { return adjoint_vekua_residual(v, prob); };
  return orthonormalize(candidates, residual, opts,
                        "mirrored-inverse images of " + monogenic.provenance);
}

Field project_span(const Field& w, const OrthonormalSystem& basis) {
  Field out(w.grid_ptr());
  for (const Field& e : basis.members) out += e * scalar_product(e, w);
  return out;
}

namespace {

Eigen::VectorXd weight_sqrt(const GridDomain& g) {
  const int nb = 1 << g.dimension();
  Eigen::VectorXd w(g.point_count() * nb);
  for (GridDomain::Index p = 0; p < g.point_count(); ++p)
    w.segment(p * nb, nb).setConstant(std::sqrt(g.weight(p)));
  return w;
}

Eigen::MatrixXd weighted_columns(const std::vector<Field>& fields, int count,
                                 const Eigen::VectorXd& ws) {
  const int k = count > 0 ? std::min<int>(count, fields.size()) : fields.size();
  Eigen::MatrixXd mat(ws.size(), k);
  for (int j = 0; j < k; ++j) mat.col(j) = ws.cwiseProduct(fields[j].flat());
  return mat;
}

}  // namespace

double span_distance(const Field& w, const std::vector<Field>& columns, int count) {
  if (columns.empty()) return 1.0;
  const Eigen::VectorXd ws = weight_sqrt(w.grid());
  const Eigen::MatrixXd mat = weighted_columns(columns, count, ws);
  const Eigen::VectorXd target = ws.cwiseProduct(w.flat());
  const Eigen::VectorXd coeffs = mat.colPivHouseholderQr().solve(target);
  const double nw = target.norm();
  return nw > 0.0 ? (target - mat * coeffs).norm() / nw : 0.0;
}

double max_principal_angle(const std::vector<Field>& span_a,
                           const std::vector<Field>& span_b) {
  if (span_a.empty() || span_b.empty())
    throw std::invalid_argument("max_principal_angle: empty span");
  const Eigen::VectorXd ws = weight_sqrt(span_a.front().grid());
  auto ortho = [&](const std::vector<Field>& span) {
    const Eigen::MatrixXd mat = weighted_columns(span, 0, ws);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(mat);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(
                                                mat.rows(), mat.cols());
    return q;
  };
  const Eigen::MatrixXd qa = ortho(span_a);
  const Eigen::MatrixXd qb = ortho(span_b);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(qa.transpose() * qb);
  const double smin =
      std::clamp(svd.singularValues().minCoeff(), -1.0, 1.0);
  return std::acos(smin);
}

VekuaProjection::VekuaProjection(VekuaProblem prob, int max_degree, BasisOptions opts)
    : prob_(std::move(prob)),
      opts_(opts),
      monogenic_(build_monogenic_basis(prob_.grid, max_degree, opts)),
      vekua_(build_vekua_basis(prob_, monogenic_, opts)) {}

const OrthonormalSystem& VekuaProjection::adjoint_vekua_basis() {
  if (!adjoint_vekua_)
    adjoint_vekua_ = build_adjoint_vekua_basis(prob_, monogenic_, opts_);
  return *adjoint_vekua_;
}

void VekuaProjection::ensure_s_factorization() {
  if (s_lu_) return;
  RealLinearOperator s = assemble_s(prob_);
  std::mt19937_64 rng(0x5eed);
  s_condition_ = condition_estimate(s, 12, rng);
  if (*s_condition_ > 1e8) {
    std::ostringstream msg;
    msg << "VekuaProjection: assembled S is ill-conditioned (estimate "
        << *s_condition_ << ")";
    throw std::runtime_error(msg.str());
  }
  s_matrix_ = std::move(s.matrix);
  s_lu_.emplace(s_matrix_);
}

double VekuaProjection::s_condition() {
  ensure_s_factorization();
  return *s_condition_;
}

Field VekuaProjection::project(const Field& w, ProjectionMode mode) {
  check_same_grid(w, prob_.alpha, "VekuaProjection::project");
  switch (mode) {
    case ProjectionMode::galerkin:
      return project_span(w, vekua_);
    case ProjectionMode::conjugated: {
      // S^{-1} P_Omega S
      ensure_s_factorization();
      const Field sw = s_apply(w, prob_);
      const Field proj = bergman(sw);
      Field out(w.grid_ptr());
      out.flat() = s_lu_->solve(proj.flat());
      return out;
    }
    case ProjectionMode::star: {
      // S* P_Omega (S*)^{-1} with S* = W^{-1} S^T W
      ensure_s_factorization();
      const GridDomain& g = *prob_.grid;
      const int nb = 1 << g.dimension();
      Eigen::VectorXd weights(g.point_count() * nb);
      for (GridDomain::Index p = 0; p < g.point_count(); ++p)
        weights.segment(p * nb, nb).setConstant(g.weight(p));
      // (S*)^{-1} w = W^{-1} S^{-T} W w
      Field y(w.grid_ptr());
      const Eigen::VectorXd solved = s_lu_->transpose().solve(
          Eigen::VectorXd(weights.cwiseProduct(w.flat())));
      y.flat() = solved.cwiseQuotient(weights);
      const Field proj = bergman(y);
      Field out(w.grid_ptr());
      out.flat() = (s_matrix_.transpose() * weights.cwiseProduct(proj.flat()))
                       .cwiseQuotient(weights);
      return out;
    }
  }
  throw std::logic_error("VekuaProjection::project: unknown mode");
}

HodgeSplit VekuaProjection::split(const Field& w,
                                  const std::vector<Field>& test_functions) {
  Field p = project(w, ProjectionMode::galerkin);
  Field q = w - p;
  HodgeSplit out{p, q};
  const double np = norm0(out.p), nq = norm0(out.q), nw = norm0(w);
  out.orthogonality =
      std::abs(scalar_product(out.p, out.q)) / std::max(np * nq, 1e-300);
  out.p_residual = vekua_residual(out.p, prob_);
  out.pythagoras_defect =
      std::abs(nw * nw - np * np - nq * nq) / std::max(nw * nw, 1e-300);
  if (!test_functions.empty()) {
    std::vector<Field> images;
    images.reserve(test_functions.size());
    for (const Field& phi : test_functions)
      images.push_back(adjoint_vekua_operator_apply(phi, prob_));
    out.q_membership = span_distance(out.q, images);
  }
  return out;
}

HodgeSplit VekuaProjection::adjoint_split(const Field& w,
                                          const std::vector<Field>& test_functions) {
  const OrthonormalSystem& basis = adjoint_vekua_basis();
  Field p = project_span(w, basis);
  Field q = w - p;
  HodgeSplit out{p, q};
  const double np = norm0(out.p), nq = norm0(out.q), nw = norm0(w);
  out.orthogonality =
      std::abs(scalar_product(out.p, out.q)) / std::max(np * nq, 1e-300);
  out.p_residual = adjoint_vekua_residual(out.p, prob_);
  out.pythagoras_defect =
      std::abs(nw * nw - np * np - nq * nq) / std::max(nw * nw, 1e-300);
  if (!test_functions.empty()) {
    std::vector<Field> images;
    images.reserve(test_functions.size());
    for (const Field& phi : test_functions)
      images.push_back(vekua_operator_apply(phi, prob_));
    out.q_membership = span_distance(out.q, images);
  }
  return out;
}

double adjoint_identity_residual(const Field& w, const Field& phi,
                                 const VekuaProblem& prob) {
  check_same_grid(w, phi, "adjoint_identity_residual");
  for (Field::Index p = 0; p < phi.grid().point_count(); ++p)
    if (phi.grid().is_boundary(p)) {
      for (int b = 0; b < phi.blade_count(); ++b)
        if (phi.coeff(p, b) != 0.0)
          throw std::invalid_argument(
              "adjoint_identity_residual: phi must vanish on the boundary");
    }
  const double lhs = scalar_product(w, adjoint_vekua_operator_apply(phi, prob));
  const double rhs = scalar_product(vekua_operator_apply(w, prob), phi);
  return std::abs(lhs - rhs) / std::max(norm0(w) * norm0(phi), 1e-300);
}

}  // namespace vekua

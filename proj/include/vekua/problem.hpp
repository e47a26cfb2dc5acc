#pragma once

#include "vekua/operators.hpp"

#include <optional>

namespace vekua {

/// Coefficients of the equation D w = alpha conj(w) + beta w on a grid,
/// with the contraction bound q = (|alpha|_inf + |beta|_inf) diam(Omega)
/// that controls the Neumann inverse of S = I - T [alpha C + beta I].
struct VekuaProblem {
  std::shared_ptr<const GridDomain> grid;
  Field alpha;
  Field beta;
  /// Set when alpha, beta were derived as grad(log f), grad(log g).
  std::optional<Field> f;
  std::optional<Field> g;
  /// Interior margin (fraction of the shortest box side) used by residual
  /// norms. The outermost layers carry the quadrature boundary layer and
  /// one-sided stencils; excluding a fixed physical margin restores the
  /// stencil order. Set to 0 for full-domain norms.
  double margin_fraction = 0.1;

  static VekuaProblem from_fields(Field alpha, Field beta);
  /// alpha = grad(log f), beta = grad(log g) for positive scalar f, g.
  static VekuaProblem from_fg(const Field& f, const Field& g);
  static VekuaProblem zero(std::shared_ptr<const GridDomain> grid);

  double alpha_sup() const { return sup_norm(alpha); }
  double beta_sup() const { return sup_norm(beta); }
  /// Upper bound on the contraction factor of T [alpha C + beta I], using
  /// |T| <= diam(Omega).
  double contraction_bound() const {
    return (alpha_sup() + beta_sup()) * grid->diameter();
  }

  int margin_layers() const { return grid->margin_layers(margin_fraction); }
};

/// Interior-weighted relative residual |num| / max(|den|, eps) with both
/// norms over the margin region of the problem.
double interior_relative(const Field& num, const Field& den, int layers);

/// alpha conj(w) + beta w.
Field vekua_coupling(const Field& w, const VekuaProblem& prob);
/// conj(w) alpha + conj(beta) w.
Field adjoint_vekua_coupling(const Field& w, const VekuaProblem& prob);

/// (D - alpha C - beta) w.
Field vekua_operator_apply(const Field& w, const VekuaProblem& prob);
/// (D - M^alpha C - conj(beta)) w.
Field adjoint_vekua_operator_apply(const Field& w, const VekuaProblem& prob);

RealLinearOperator assemble_vekua_operator(const VekuaProblem& prob);
RealLinearOperator assemble_adjoint_vekua_operator(const VekuaProblem& prob);

/// S[w] = w - T[alpha conj(w) + beta w].
Field s_apply(const Field& w, const VekuaProblem& prob);
/// Mirrored operator S'[w] = w - T[conj(w) alpha + conj(beta) w]; its kernel
/// construction parallels s_apply for the adjoint equation.
Field s_adjoint_apply(const Field& w, const VekuaProblem& prob);

RealLinearOperator assemble_s(const VekuaProblem& prob);

struct NeumannOptions {
  double tolerance = 1e-12;
  int max_iterations = 400;
  /// Proceed past q >= 1 (the bound is only an upper estimate).
  bool override_contraction = false;
};

struct NeumannStats {
  int iterations = 0;
  double last_update = 0.0;       // |w_{k+1} - w_k|_0 / |v|_0
  double mean_contraction = 0.0;  // geometric mean of successive update ratios
};

/// Neumann-series inverse of S: w_{k+1} = v + T[alpha conj(w_k) + beta w_k]
/// until the update drops below tolerance * |v|_0. Throws on q >= 1 unless
/// overridden, and on non-convergence (the message carries the last update).
Field s_inverse_apply(const Field& v, const VekuaProblem& prob,
                      const NeumannOptions& opts = {}, NeumannStats* stats = nullptr);

/// Neumann inverse of the mirrored operator.
Field s_adjoint_inverse_apply(const Field& v, const VekuaProblem& prob,
                              const NeumannOptions& opts = {},
                              NeumannStats* stats = nullptr);

/// w = S^{-1}[g] for an (approximately) monogenic g.
Field make_vekua_solution(const Field& g_monogenic, const VekuaProblem& prob,
                          const NeumannOptions& opts = {});

/// |D w - alpha conj(w) - beta w|_0 / max(|w|_0, eps), interior-weighted.
double vekua_residual(const Field& w, const VekuaProblem& prob);
double vekua_residual(const Field& w, const VekuaProblem& prob, int margin_layers);
/// Residual of the adjoint equation D w = conj(w) alpha + conj(beta) w.
double adjoint_vekua_residual(const Field& w, const VekuaProblem& prob);

/// u = w0/(fg) + (f/g) NSc(w), the Beltrami transform of a Vekua candidate.
Field beltrami_transform(const Field& w, const Field& f, const Field& g);
/// |D u - ((1-f^2)/(1+f^2)) D conj(u)|_0 / |u|_0, interior-weighted.
double beltrami_residual(const Field& u, const Field& f, double margin_fraction = 0.1);

/// |div(f^2 grad(w0/(fg)))|_0 / |w0|_0.
double conductivity_residual(const Field& w, const Field& f, const Field& g,
                             double margin_fraction = 0.1);
/// |(Lap - Lap f / f)(w0/g)|_0 / |w0|_0.
double schrodinger_residual(const Field& w, const Field& f, const Field& g,
                            double margin_fraction = 0.1);

}  // namespace vekua

#pragma once

#include "vekua/problem.hpp"

namespace vekua {

/// Coefficient pair with the derived scalar fields entering the second-order
/// forms: |alpha|^2, |beta|^2, div of the vector parts, and the coefficient
/// dot products alpha . conj(beta) and alpha . beta.
struct PotentialSpec {
  VekuaProblem problem;
  Field alpha_sq;             ///< pointwise |alpha|^2 (blade 0)
  Field beta_sq;              ///< pointwise |beta|^2
  Field div_alpha;            ///< div Vec(alpha)
  Field div_beta;             ///< div Vec(beta)
  Field alpha_dot_conj_beta;  ///< coefficient dot after conjugating beta
  Field alpha_dot_beta;       ///< plain coefficient dot
};

PotentialSpec potential_from_fields(const Field& alpha, const Field& beta);
/// alpha = grad f / f, beta = grad g / g for positive scalar f, g; consistency
/// of the provenance is recorded in problem.f / problem.g.
PotentialSpec potential_from_fg(const Field& f, const Field& g);

enum class FactorOrder { forward, adjoint };

/// Residual between the scalar second-order form and the scalar part of the
/// composed first-order operators applied to a scalar h0:
///   forward: (-Lap + |a|^2 + |b|^2 + div a - div b + 2 a.conj(b)) h0
///            vs Sc (D - aC - b)(D - M^a C - conj(b)) h0,
///   adjoint: (-Lap + |a|^2 + |b|^2 + div a + div b + 2 a.b) h0
///            vs Sc (D - M^a C - conj(b))(D - aC - b) h0.
/// The left side is built from stencils on the derived scalars, the right
/// side from composing the assembled operators; the routes share no code.
double factorization_residual(const Field& h0, const PotentialSpec& spec,
                              FactorOrder order);

/// Same right-hand side, with the left side written directly in f and g:
/// (-Lap + Lap f/f - Lap g/g + 2 (grad g/g).(grad g/g - grad f/f)) h0.
/// Requires f, g provenance.
double factorization_residual_fg_form(const Field& h0, const PotentialSpec& spec);

/// Internal-consistency check of the displayed expansion of the composed
/// operator on a general field h: term-by-term stencil evaluation of
///   -Lap h - D(conj(h) a) - D(conj(b) h) + a((conj(h))D + conj(a)h + conj(h)b)
///   - b(Dh - conj(h)a - conj(b)h)
/// against the composed assembled operators ((conj(h))D is the right-acting
/// derivative sum_i d_i(conj h) e_i).
double full_factorization_residual(const Field& h, const PotentialSpec& spec);

/// Pointwise difference of the forward and adjoint potentials minus the
/// closed form (-2 div b + 2 a.conj(b) - 2 a.b); zero up to roundoff.
double potential_difference_defect(const PotentialSpec& spec);

}  // namespace vekua

#pragma once

#include "vekua/monogenic.hpp"
#include "vekua/problem.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>

namespace vekua {

struct BasisOptions {
  /// Candidates whose post-orthogonalization defining residual exceeds this
  /// are discarded; the basis is resolution-limited rather than polluted.
  double build_tolerance = 0.05;
  /// Relative remaining-norm threshold below which a candidate counts as
  /// linearly dependent.
  double dependence_tolerance = 1e-8;
};

/// Fields orthonormal under the quadrature scalar product, each with its
/// defining residual (monogenicity or Vekua) recorded at build time.
struct OrthonormalSystem {
  std::vector<Field> members;
  std::vector<double> residuals;
  std::string provenance;
  int dropped = 0;

  int size() const { return static_cast<int>(members.size()); }
  double max_residual() const;
  /// max |<e_i, e_j> - delta_ij|.
  double gram_residual() const;
};

/// Modified Gram-Schmidt with one re-orthogonalization pass, dependence
/// dropping, and defining-residual dropping.
OrthonormalSystem orthonormalize(const std::vector<Field>& candidates,
                                 const std::function<double(const Field&)>& residual,
                                 const BasisOptions& opts, std::string provenance);

/// Discrete A^2 basis from exact monogenic polynomial candidates.
OrthonormalSystem build_monogenic_basis(std::shared_ptr<const GridDomain> grid,
                                        int max_degree, const BasisOptions& opts = {});

/// Discrete Vekua-solution basis: S^{-1} images of the monogenic members,
/// re-orthonormalized. `solve` defaults to the Neumann inverse.
OrthonormalSystem build_vekua_basis(
    const VekuaProblem& prob, const OrthonormalSystem& monogenic,
    const BasisOptions& opts = {},
    const std::function<Field(const Field&)>& solve = {});

/// Basis for the adjoint equation D w = conj(w) alpha + conj(beta) w via the
/// mirrored inverse.
OrthonormalSystem build_adjoint_vekua_basis(
    const VekuaProblem& prob, const OrthonormalSystem& monogenic,
    const BasisOptions& opts = {});

/// Galerkin projection P[w] = sum_k e_k <e_k, w>_0.
Field project_span(const Field& w, const OrthonormalSystem& basis);

/// Least-squares distance of w to span{columns}, under the quadrature scalar
/// product, normalized by |w|_0. Uses the first `count` columns (all if 0).
double span_distance(const Field& w, const std::vector<Field>& columns,
                     int count = 0);

/// Largest principal angle (radians) between the spans, both orthonormalized
/// under the quadrature product.
double max_principal_angle(const std::vector<Field>& span_a,
                           const std::vector<Field>& span_b);

struct HodgeSplit {
  Field p;  ///< Vekua-space part
  Field q;  ///< complement part, w - p
  double orthogonality = 0.0;       ///< |<p,q>_0| / (|p|_0 |q|_0)
  double p_residual = 0.0;          ///< Vekua residual of p
  double q_membership = 0.0;        ///< distance of q to the adjoint-image span
  double pythagoras_defect = 0.0;   ///< ||w|^2 - |p|^2 - |q|^2| / |w|^2
};

enum class ProjectionMode { galerkin, star, conjugated };

/// Shared context for the three projection formulas: the monogenic and
/// Vekua bases plus a factorization of the assembled S for the star and
/// conjugated modes (built lazily, dense desk-scale only).
class VekuaProjection {
public:
  VekuaProjection(VekuaProblem prob, int max_degree, BasisOptions opts = {});

  const VekuaProblem& problem() const { return prob_; }
  const OrthonormalSystem& monogenic_basis() const { return monogenic_; }
  const OrthonormalSystem& vekua_basis() const { return vekua_; }
  const OrthonormalSystem& adjoint_vekua_basis();

  /// Projection onto the monogenic span.
  Field bergman(const Field& w) const { return project_span(w, monogenic_); }

  Field project(const Field& w, ProjectionMode mode);

  /// Condition estimate of the assembled S (triggers assembly).
  double s_condition();

  HodgeSplit split(const Field& w, const std::vector<Field>& test_functions);
  /// Mirror split: kernel side from the adjoint equation, complement from
  /// (D - alpha C - beta) images.
  HodgeSplit adjoint_split(const Field& w, const std::vector<Field>& test_functions);

private:
  void ensure_s_factorization();

  VekuaProblem prob_;
  BasisOptions opts_;
  OrthonormalSystem monogenic_;
  OrthonormalSystem vekua_;
  std::optional<OrthonormalSystem> adjoint_vekua_;
  Eigen::MatrixXd s_matrix_;
  std::optional<Eigen::PartialPivLU<Eigen::MatrixXd>> s_lu_;
  std::optional<double> s_condition_;
};

/// |<w, (D - M^a C - conj(b)) phi>_0 - <(D - a C - b) w, phi>_0| /
/// (|w|_0 |phi|_0) for phi vanishing on the boundary.
double adjoint_identity_residual(const Field& w, const Field& phi,
                                 const VekuaProblem& prob);

}  // namespace vekua

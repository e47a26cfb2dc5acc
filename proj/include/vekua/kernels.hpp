#pragma once

#include "vekua/hodge.hpp"

namespace vekua {

/// Truncated component-wise kernel K^A(x, y) = sum_k [e_k(x)]_A e_k(y) over
/// the orthonormal system. All kernel statements are relative to the span of
/// the basis, for which the truncation is exact.
Multivector kernel_eval(const OrthonormalSystem& basis, unsigned blade_a,
                        GridDomain::Index x, GridDomain::Index y);

/// K^A(., x) as a field in the first argument-free variable.
Field kernel_slice(const OrthonormalSystem& basis, unsigned blade_a,
                   GridDomain::Index x);

/// <K^A(., x), w>_0; recovers w_A(x) for w in the span.
double reproduce_component(const Field& w, unsigned blade_a, GridDomain::Index x,
                           const OrthonormalSystem& basis);

/// max over sampled point pairs of |[K^A]_B(x,y) - [K^B]_A(y,x)|.
double kernel_symmetry_residual(const OrthonormalSystem& basis, unsigned blade_a,
                                unsigned blade_b, int sample_pairs,
                                std::mt19937_64& rng);

/// Kernel form of the projection,
///   P[w](x) = sum_y wt(y) sum_B (-1)^{|B|(|B|+1)/2} e_B^2 K^B(x,y) w_B(y),
/// with the sign factors evaluated literally from the algebra tables.
Field kernel_projection(const Field& w, const OrthonormalSystem& basis);

/// Dense K^A tables for every blade; refuses to materialize beyond the
/// memory cap (bytes).
struct KernelTable {
  const OrthonormalSystem* basis = nullptr;
  std::vector<Eigen::MatrixXd> component;  ///< per blade A: [K^A]_? needs y-blades..
};

/// Materialized scalar tables M^{A}(x,y) = [K^A]_B(x,y) for one fixed result
/// blade B, all (x, y); used for inspection/export.
Eigen::MatrixXd kernel_component_table(const OrthonormalSystem& basis,
                                       unsigned blade_a, unsigned blade_b,
                                       std::size_t memory_cap_bytes = 1u << 30);

/// Orthonormal system spanning g * (monogenic members): the exact image of
/// the monogenic space under the conductivity factorization D - grad(g)/g =
/// g D g^{-1}.
OrthonormalSystem scaled_monogenic_basis(const Field& g_scalar,
                                         const OrthonormalSystem& monogenic,
                                         const BasisOptions& opts = {});

}  // namespace vekua

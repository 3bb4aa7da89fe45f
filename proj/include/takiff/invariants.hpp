#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "takiff/builders.hpp"
#include "takiff/polynomial.hpp"

namespace takiff_lab {

/// (e_i . f)(v) = sum_k (rho(e_i) v)_k df/dv_k
Polynomial lie_derivative(const Representation& rep, const Polynomial& f, std::size_t i);
/// Symbolic: every basis Lie derivative vanishes identically.
bool is_invariant(const Representation& rep, const Polynomial& f);

/// X = sum_k x_{offset + k} B_k over the basis of `space`.
PolyMatrix generic_matrix(const MatrixSpace& space, std::size_t num_vars, std::size_t offset = 0);
PolyMatrix generic_matrix(const std::vector<Matrix>& basis, std::size_t num_vars, std::size_t offset = 0);

/// Basic invariants of a classical algebra evaluated on a generic matrix X of
/// it. A: characteristic polynomial coefficients of degrees 2..n+1. B, C:
/// tr X^{2i}, i = 1..n. D: tr X^{2i}, i = 1..n-1, and Pf(G X). Rank 1 in type
/// D (so_2) is allowed here and yields the Pfaffian alone.
std::vector<Polynomial> casimirs_of_matrix(ClassicalType type, std::size_t rank, const PolyMatrix& x,
                                           const Matrix* form = nullptr);
std::vector<Polynomial> casimir_generators(const ClassicalAlgebra& ca);
std::vector<std::string> casimir_names(ClassicalType type, std::size_t rank);

/// Gradient in coordinates: component k is df/dx_k.
PolyMap differential(const Polynomial& f);
/// hat F(x, v) = <F(x), v> on the semidirect algebra; F lands in V*
/// coordinates of sd.source_rep.
Polynomial hat_covariant(const PolyMap& f, const SemidirectData& sd);

/// Covariants x -> x^{2i} of so/sp into the traceless self-adjoint module
/// (sym2_traceless or wedge2_reduced). `to_dual` pairs them into the dual
/// module by the trace form: component k is tr(x^{2i} C_k).
struct CovariantFamily {
  std::vector<PolyMap> to_module;
  std::vector<PolyMap> to_dual;
  std::vector<int> degrees;
};
/// sp_{2n}: i = 1..n-1.
CovariantFamily sp_covariants(const ClassicalAlgebra& ca);
/// so_{2n+1}: i = 1..n; so_{2n}: i = 1..n-1.
CovariantFamily so_covariants(const ClassicalAlgebra& ca);

/// DF_x(e_i . x) == e_i . F(x) as polynomial identities, for every basis e_i.
bool equivariance_check(const PolyMap& f, const Representation& rep_in, const Representation& rep_out);

/// f(x_0 + eps x_1 + ... + eps^n x_n) mod eps^{n+1}, on layer-major variables
/// (x_j occupies indices j*d .. j*d + d - 1).
struct EpsilonExpansion {
  std::size_t level = 0;
  std::size_t base_dim = 0;
  std::vector<Polynomial> coefficients;
};
EpsilonExpansion takiffize_invariant(const Polynomial& f, std::size_t n);

/// Rank of the Jacobian of fs at one exact point.
std::size_t jacobian_rank(const std::vector<Polynomial>& fs, const Vector& point);
/// Maximum Jacobian rank over the points.
std::size_t independence_rank(const std::vector<Polynomial>& fs, const std::vector<Vector>& points);

enum class IndependenceStatus { independent, inconclusive };
struct IndependenceReport {
  std::size_t rank = 0;
  std::size_t count = 0;
  std::size_t points_used = 0;
  IndependenceStatus status = IndependenceStatus::inconclusive;
};
/// Samples up to `trials` integer points and stops at full rank. Falling
/// short is reported as inconclusive, never as dependence.
IndependenceReport certify_independence(const std::vector<Polynomial>& fs, std::size_t trials = 8,
                                        std::uint64_t seed = 0);

/// Candidate free generators of the invariant ring of an algebra's adjoint
/// representation.
struct GeneratorSystem {
  std::vector<Polynomial> generators;
  std::vector<std::string> names;
  std::string construction;
};
/// Supported: classical atoms, takiff of a classical atom, sd of a classical
/// atom with adjoint, sym2_traceless or wedge2_reduced, and z2 so/sp/swap.
/// Throws std::invalid_argument otherwise.
GeneratorSystem generator_system(const AlgebraBundle& bundle);

struct InvariantCertificate {
  std::vector<bool> invariant;
  bool all_invariant = false;
  IndependenceReport independence;
  std::size_t index = 0;
  bool count_matches_index = false;
  bool ok() const {
    return all_invariant && independence.status == IndependenceStatus::independent && count_matches_index;
  }
};
InvariantCertificate certify_generators(const LieAlgebra& alg, const GeneratorSystem& system, std::size_t trials = 8,
                                        std::uint64_t seed = 0);

}  // namespace takiff_lab

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "takiff/linalg.hpp"
#include "takiff/rational.hpp"

namespace takiff_lab {

/// Sorted (index, coefficient) pairs with no zero coefficients.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// One structure constant: [e_i, e_j] has coefficient `value` on e_k.
struct StructureEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational value;
};

/// Finite-dimensional Lie algebra given by exact structure constants on a
/// labeled basis. Immutable and cheap to copy (shared storage).
class LieAlgebra {
 public:
  LieAlgebra();
  /// Entries are read for i < j only; the i > j half is filled in by
  /// antisymmetry. Entries with i == j or out-of-range indices throw, and a
  /// repeated (i, j, k) accumulates.
  LieAlgebra(std::vector<std::string> labels, const std::vector<StructureEntry>& entries);
  /// Structure from the bracket of every ordered basis pair i < j.
  static LieAlgebra from_brackets(std::vector<std::string> labels, const std::vector<std::vector<Vector>>& brackets);
  static LieAlgebra abelian(std::size_t dim, const std::string& prefix = "a");

  std::size_t dim() const;
  const std::vector<std::string>& labels() const;
  const SparseVector& basis_bracket(std::size_t i, std::size_t j) const;
  /// Nonzero entries with i < j, ordered by (i, j, k).
  std::vector<StructureEntry> entries() const;
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y);

struct JacobiReport {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> first_failure;
};
/// Exhaustive check of the Jacobi identity over basis triples i < j < k.
JacobiReport check_jacobi(const LieAlgebra& alg);

/// Column j is bracket(x, e_j).
Matrix ad_matrix(const LieAlgebra& alg, const Vector& x);
SubspaceBasis centralizer(const LieAlgebra& alg, const Vector& x);
/// Joint centralizer of a subspace: {y : [y, s] = 0 for all s in sub}.
SubspaceBasis centralizer(const LieAlgebra& alg, const SubspaceBasis& sub);
SubspaceBasis center(const LieAlgebra& alg);
bool is_commutative(const SubspaceBasis& sub, const LieAlgebra& alg);
bool is_subalgebra(const SubspaceBasis& sub, const LieAlgebra& alg);
/// {x : [x, sub] in sub}
SubspaceBasis normalizer(const LieAlgebra& alg, const SubspaceBasis& sub);
/// span{[a, b] : a in A, b in B}
SubspaceBasis bracket_span(const LieAlgebra& alg, const SubspaceBasis& a, const SubspaceBasis& b);

/// Lie algebra on the basis of a subalgebra, with induced structure constants.
/// Throws std::invalid_argument when sub is not closed under the bracket.
LieAlgebra induced_subalgebra(const LieAlgebra& alg, const SubspaceBasis& sub,
                              std::vector<std::string> labels = {});
/// Quotient by an ideal; the quotient basis is the set of standard basis
/// vectors that complete the ideal's echelon basis.
LieAlgebra quotient_algebra(const LieAlgebra& alg, const SubspaceBasis& ideal);

enum class FormKind { symmetric, skew };

struct BilinearForm {
  Matrix matrix;
  FormKind kind = FormKind::symmetric;

  bool matches_kind() const;
  bool is_nondegenerate() const;
};

/// B[i][j] = <xi, [e_i, e_j]>
BilinearForm kirillov_form(const LieAlgebra& alg, const Vector& xi);

struct IndexResult {
  std::size_t index = 0;
  Vector best_covector;
  std::size_t max_rank = 0;
};
/// Generic corank of the Kirillov form: dim minus the maximum rank over
/// `trials` sampled integer covectors whose height grows with the trial
/// number. Exact with probability 1; never below the true index.
IndexResult index_report(const LieAlgebra& alg, std::size_t trials = 8, std::uint64_t seed = 0);
std::size_t index(const LieAlgebra& alg, std::size_t trials = 8, std::uint64_t seed = 0);

/// Module over a Lie algebra given by one action matrix per basis element.
class Representation {
 public:
  Representation() = default;
  Representation(LieAlgebra algebra, std::vector<Matrix> action, std::string name = {});

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim_module() const { return dim_module_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_.at(i); }
  const std::string& name() const { return name_; }
  /// rho(x) = sum_i x_i rho(e_i)
  Matrix act(const Vector& x) const;

 private:
  LieAlgebra algebra_;
  std::size_t dim_module_ = 0;
  std::vector<Matrix> action_;
  std::string name_;
};

struct HomomorphismReport {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
};
/// rho([e_i, e_j]) == [rho(e_i), rho(e_j)] for all i < j.
HomomorphismReport check_homomorphism(const Representation& rep);

Representation adjoint_representation(const LieAlgebra& alg);
/// Contragredient module: rho*(x) = -rho(x)^T.
Representation dual_representation(const Representation& rep);
Representation trivial_representation(const LieAlgebra& alg, std::size_t dim);
/// Joint kernel of rho(s) over a basis of `sub` (the fixed space V^sub).
SubspaceBasis fixed_space(const Representation& rep, const SubspaceBasis& sub);
/// Module vectors killed by rho(x).
SubspaceBasis fixed_space(const Representation& rep, const Vector& x);

/// {"dim": n, "labels": [...], "structure": [[i, j, k, "p/q"], ...]} with i < j.
std::string to_json(const LieAlgebra& alg);
LieAlgebra algebra_from_json(const std::string& text);

}  // namespace takiff_lab

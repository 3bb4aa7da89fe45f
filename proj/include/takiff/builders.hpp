#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "takiff/lie_algebra.hpp"

namespace takiff_lab {

/// Linear span of N x N matrices with fast coordinate extraction. Coordinates
/// are read off a fixed set of pivot entries, so the cost of coordinates(X)
/// scales with the number of nonzero entries of X at those positions.
class MatrixSpace {
 public:
  MatrixSpace() = default;
  /// Basis must be linearly independent; throws std::invalid_argument if not.
  MatrixSpace(std::size_t n, std::vector<Matrix> basis);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }

  Matrix element(const Vector& coords) const;
  /// Throws std::invalid_argument when m is not in the span.
  Vector coordinates(const Matrix& m) const;
  bool contains(const Matrix& m) const;
  /// Coordinate k as a linear functional on the flattened matrix entries:
  /// coordinate_k(X) = sum over (p, c) of c * X[p / n][p % n].
  std::vector<std::vector<std::pair<std::size_t, Rational>>> coordinate_functionals() const;

  /// Column b of matrix a is coordinates([A_a, M_b]) in `module`, where A_a
  /// runs over this basis and M_b over the module basis. The module must be
  /// stable under commutators with this space (not rechecked).
  std::vector<Matrix> commutator_action(const MatrixSpace& module) const;
  /// Structure constants of the commutator bracket; the span must be closed.
  LieAlgebra bracket_algebra(std::vector<std::string> labels) const;

 private:
  Vector coordinates_of_sparse(const std::vector<std::pair<std::size_t, Rational>>& entries) const;

  std::size_t n_ = 0;
  std::vector<Matrix> basis_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;  // flat position -> value
  std::vector<std::size_t> pivot_positions_;
  std::map<std::size_t, std::size_t> pivot_index_;                       // flat position -> t
  std::vector<std::vector<std::pair<std::size_t, Rational>>> inverse_;  // row t of M^{-1}
};

enum class ClassicalType { A, B, C, D };

char type_letter(ClassicalType t);
ClassicalType parse_type_letter(char c);

/// A classical Lie algebra in its defining matrix model.
struct ClassicalAlgebra {
  LieAlgebra base;
  ClassicalType type = ClassicalType::A;
  std::size_t rank = 0;
  /// Size of the defining matrices.
  std::size_t n_defining = 0;
  /// The form G with base = {X : X^T G + G X = 0}; empty for type A.
  std::optional<BilinearForm> form;
  MatrixSpace matrices;
  /// Traceless G-self-adjoint matrices (empty for type A); the module behind
  /// the sym2_traceless / wedge2_reduced catalog entry.
  MatrixSpace form_module;
  /// defining, adjoint, coadjoint, trivial, plus sym2_traceless (B, D) or
  /// wedge2_reduced (C).
  std::map<std::string, Representation> rep_catalog;

  Matrix matrix(const Vector& x) const { return matrices.element(x); }
  Vector coordinates(const Matrix& m) const { return matrices.coordinates(m); }
  const Representation& rep(const std::string& name) const;
};

/// Antidiagonal ones: the split symmetric form.
Matrix split_symmetric_form(std::size_t n);
/// J with J[i][N-1-i] = 1 for i < N/2 and -1 otherwise.
Matrix split_skew_form(std::size_t n);

/// Algebra {X : X^T G + G X = 0} for a nondegenerate symmetric or skew form G
/// with exactly one nonzero entry per row (all forms used here have that
/// shape). The catalog gets the G-self-adjoint traceless module under the
/// name sym2_traceless (symmetric G) or wedge2_reduced (skew G).
ClassicalAlgebra form_algebra(const BilinearForm& form, ClassicalType type, std::size_t rank);

/// A_n = sl_{n+1}, B_n = so_{2n+1}, C_n = sp_{2n}, D_n = so_{2n}. Supported
/// ranks: A, B, C from 1 and D from 2, up to max_rank.
ClassicalAlgebra classical(ClassicalType type, std::size_t rank, std::size_t max_rank = 12);

/// Basis e_1..e_n, f_1..f_n, z with [e_i, f_i] = z.
LieAlgebra heisenberg(std::size_t n);
/// Upper triangular traceless matrices of sl_{n+1}.
LieAlgebra borel(const ClassicalAlgebra& ca);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Present when a semidirect product came out of an involution: the ambient
/// algebra and the images of the g0 and g1 bases inside it.
struct ContractionOrigin {
  LieAlgebra ambient;
  SubspaceBasis g0;
  SubspaceBasis g1;
  /// Column k is the ambient image of total basis vector k (g0 basis, then g1).
  Matrix to_ambient;
  std::optional<ClassicalAlgebra> matrix_model;
};

struct SemidirectData {
  LieAlgebra total;
  SubspaceBasis embed_algebra;
  SubspaceBasis embed_module;
  Representation source_rep;
  std::optional<ContractionOrigin> origin;
};

/// q x V with [(x, v), (x', v')] = ([x, x'], x.v' - x'.v). Basis: q first, then V.
/// Throws std::invalid_argument when rep fails the homomorphism check.
SemidirectData semidirect(const LieAlgebra& alg, const Representation& rep);

struct TakiffData {
  LieAlgebra total;
  LieAlgebra source;
  std::size_t level = 0;
  std::vector<SubspaceBasis> layer_bases;
};

/// q<n> = q (x) k[T]/(T^{n+1}); basis index j*dim(q) + i holds e_i T^j.
TakiffData takiff(const LieAlgebra& alg, std::size_t n);
/// Module V x V over takiff(q, 1) with (x1, x2).(v1, v2) = (x1.v1, x1.v2 - x2.v1).
/// For V = q this is the adjoint module of takiff(q, 1) after v2 -> -v2.
Representation takiffize_module(const Representation& rep, const TakiffData& tk);

struct Involution {
  LieAlgebra algebra;
  Matrix matrix;
  std::string name;
  /// Matrix model of `algebra` when it is sl_N.
  std::optional<ClassicalAlgebra> matrix_model;
};
struct InvolutionReport {
  bool squares_to_identity = false;
  bool preserves_bracket = false;
  bool ok() const { return squares_to_identity && preserves_bracket; }
};
InvolutionReport check_involution(const Involution& inv);

enum class InvolutionKind { orthogonal, symplectic, swap };
/// (sl_N, so_N) via X -> -S^{-1} X^T S with S split symmetric; (sl_N, sp_N)
/// via X -> -J^{-1} X^T J; swap on g + g for g = sl_N. N = sl rank + 1.
Involution standard_involution(InvolutionKind kind, std::size_t sl_rank);
Involution swap_involution(const LieAlgebra& g);

/// g0 x g1 from the +1 and -1 eigenspaces. Throws std::invalid_argument for a
/// matrix that is not an involutive automorphism.
SemidirectData z2_contraction(const Involution& inv);

/// Form-compatible nilpotent with given Jordan type. The ambient algebra is
/// built on a block form (one canonical pairing per indecomposable block),
/// not on the split form of classical().
struct NilpotentModel {
  ClassicalAlgebra algebra;
  Vector x;
  Matrix matrix;
};
/// Throws std::invalid_argument on a parity violation or when the parts do
/// not fit the defining module (sum N, odd for B, even for C and D).
NilpotentModel nilpotent_from_partition(ClassicalType type, const std::vector<int>& parts);
/// Jordan block sizes from the ranks of successive powers.
std::vector<int> jordan_type(const Matrix& x);

/// Everything a descriptor can resolve to; `algebra` is always set.
struct AlgebraBundle {
  std::string descriptor;
  LieAlgebra algebra;
  std::optional<ClassicalAlgebra> classical;
  std::optional<SemidirectData> semidirect;
  std::optional<TakiffData> takiff;
  std::optional<Involution> involution;
  std::optional<std::size_t> heisenberg_n;
  bool is_borel = false;
};

/// Grammar: A3 | B2 | C4 | D5 | heis2 | borel:A2 | takiff:<atom>:n |
/// z2:A3:so | z2:A3:sp | z2:A1:swap | sd:<atom>:<rep>, rep one of adjoint,
/// coadjoint, defining, sym2_traceless, wedge2_reduced, trivial.
/// Throws std::invalid_argument on unknown descriptors.
AlgebraBundle parse_descriptor(const std::string& descriptor);

}  // namespace takiff_lab

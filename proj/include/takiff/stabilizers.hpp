#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "takiff/builders.hpp"

namespace takiff_lab {

/// Outcome of one genericity test at one exact point. `verdict` combines the
/// defining checks; `checks` may also carry side conditions that are reported
/// but do not enter the verdict.
struct GenericityReport {
  Vector point;
  SubspaceBasis stabilizer;
  std::map<std::string, bool> checks;
  std::map<std::string, long> dims;
  bool verdict = false;
  std::uint64_t seed = 0;
};
/// {"point": [...], "checks": {...}, "dims": {...}, "verdict": b, "seed": s}
std::string to_json(const GenericityReport& r);

/// q_v, V^{q_v} and the test q.v + V^{q_v} = V.
GenericityReport elashvili_check(const Representation& rep, const Vector& v);

/// z_q(x) commutative and [q, x] + z_q(x) = q. Side conditions, reported
/// only: the centralizer is self-normalizing, and q* = x.q* + (q*)^x.
GenericityReport adjoint_generic_check(const LieAlgebra& alg, const Vector& x);

/// q_xi = ker of the Kirillov form, and q_xi cap [q, q_xi] = 0. Side
/// condition: q_xi commutative.
GenericityReport coadjoint_generic_check(const LieAlgebra& alg, const Vector& xi);

/// [q, h] cap z_q(h) = 0. Throws std::invalid_argument when h is not a
/// subalgebra.
bool near_toral_check(const LieAlgebra& alg, const SubspaceBasis& h);

/// For x in the acting algebra of sd: V^x = V^{z(x)} and V^x + x.V = V. The
/// lifted point x + v, with v a seeded combination of a basis of V^{z(x)}, is
/// also run through adjoint_generic_check on sd.total (check "lift_generic").
GenericityReport sgp_transfer_check(const SemidirectData& sd, const Vector& x, std::uint64_t seed = 0);

struct YakobyReport {
  bool near_toral = false;
  /// [q, h] + z_q(h) = q
  bool split = false;
  std::size_t index_q = 0;
  std::size_t index_centralizer = 0;
  std::size_t dim_h = 0;
  bool ok() const { return near_toral && split && index_q == index_centralizer && index_q == dim_h; }
};
/// Throws std::invalid_argument when h is not the stabilizer q_xi.
YakobyReport yakoby_identities(const LieAlgebra& alg, const SubspaceBasis& h, const Vector& xi,
                               std::size_t trials = 8, std::uint64_t seed = 0);

/// dim ka//K for a contraction g0 x g1 of g, computed twice:
/// (a) rk g0 + dim g1^t for a Cartan t of g0 (centralizer of a sampled
///     element of g0, assumed reductive);
/// (b) dim z_g(x) for the same sampled element pushed into g.
struct ContractionDims {
  std::size_t via_torus = 0;
  std::size_t rank_g0 = 0;
  std::size_t fixed_g1 = 0;
  std::size_t via_centralizer = 0;
  std::size_t index_contraction = 0;
  std::size_t index_reference = 0;
  Vector sample;
  bool agree() const {
    return via_torus == via_centralizer && via_torus == index_contraction && index_contraction == index_reference;
  }
};
/// Throws std::invalid_argument when sd has no contraction origin or g_ref is
/// not its ambient algebra.
ContractionDims contraction_dims(const SemidirectData& sd, const LieAlgebra& g_ref, std::size_t trials = 8,
                                 std::uint64_t seed = 0);

/// Sample `trials` integer points (growing height) and report the one with the
/// smallest centralizer. Among equal sizes a passing sample beats a failing
/// one, then the earliest wins.
GenericityReport sampled_adjoint_check(const LieAlgebra& alg, std::size_t trials = 8, std::uint64_t seed = 0);
/// Same for covectors, keeping the smallest stabilizer q_xi.
GenericityReport sampled_coadjoint_check(const LieAlgebra& alg, std::size_t trials = 8, std::uint64_t seed = 0);

}  // namespace takiff_lab

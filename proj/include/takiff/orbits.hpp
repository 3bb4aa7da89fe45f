#pragma once

#include <optional>
#include <string>
#include <vector>

#include "takiff/builders.hpp"

namespace takiff_lab {

/// Jordan type of a nilpotent in the defining module of a classical algebra.
struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive
  ClassicalType type = ClassicalType::A;
  int size() const;
};

/// B, D: even parts have even multiplicity, C: odd parts do. B needs an odd
/// size, C and D an even one.
bool is_valid_partition(ClassicalType type, const std::vector<int>& parts);
/// Sorts the parts; throws std::invalid_argument when invalid for the type.
Partition make_partition(ClassicalType type, std::vector<int> parts);
/// "4,2,2"
Partition parse_partition(ClassicalType type, const std::string& text);
std::string to_string(const Partition& p);

/// Reverse lexicographic order, so (size) first and (1,...,1) last. Throws
/// std::invalid_argument on a size the type cannot have.
std::vector<Partition> enumerate_partitions(ClassicalType type, int size);
/// Transpose: entry i counts the parts >= i + 1.
std::vector<int> dual(const std::vector<int>& parts);

/// Rank of the algebra acting on a module of the partition's size.
std::size_t algebra_rank(ClassicalType type, int size);
std::size_t algebra_dim(ClassicalType type, std::size_t rank);
/// Module size for a rank: n + 1, 2n + 1, 2n, 2n.
int defining_size(ClassicalType type, std::size_t rank);

long centralizer_dim(const Partition& p);
long rank_dpi(const Partition& p);
/// min(m, floor((eta_1 - 1) / 2)) for B, C, D; min(m, eta_1 - 1) for A, where
/// the covariants are the powers x^k rather than x^{2i}.
long stratum_index(const Partition& p, long m);
/// Number of basic covariants x^{2i} for the symmetric pair whose fixed algebra
/// has the given type and rank: C: n - 1, B: n, D: n - 1; A: n (powers x^k).
long pair_covariant_count(ClassicalType type, std::size_t rank);

/// dim of the Springer fiber over x, as (dim z(x) - rk g) / 2.
long springer_fiber_dim(const Partition& p);

/// dim z(x) + 2 rk(d pi)_x - 3 rk g
long L_takiff(const Partition& p);
/// dim z_{g0}(x) - rk g0 - 2 (m - stratum) for p a g0-partition of an sp or so
/// pair. Throws std::invalid_argument for type A.
long L_z2(const Partition& p);

struct OrbitRecord {
  Partition partition;
  std::size_t rank = 0;
  long centralizer_dim = 0;
  long rank_dpi = 0;
  long stratum_index = 0;
  long L_takiff = 0;
  std::optional<long> L_z2;
};
OrbitRecord formula_record(const Partition& p);

/// Independent route through matrices: builds x = nilpotent_from_partition and
/// reads off dim ker ad x, the rank of the Casimir differentials at x (trace
/// powers, plus the Pfaffian for D), and the rank of the covariant values.
/// Throws std::invalid_argument above max_size.
OrbitRecord matrix_oracle(const Partition& p, int max_size = 10);

enum class Inequality { bril_takiff, brilliant, not_vain };
std::string inequality_name(Inequality q);
/// Accepts "bril-takiff", "bril_takiff", "brilliant", "not-vain", "not_vain".
Inequality parse_inequality(const std::string& s);

struct SweepEntry {
  OrbitRecord record;
  long value = 0;  // the left-hand side compared against 0
};
struct SweepReport {
  Inequality inequality = Inequality::bril_takiff;
  ClassicalType type = ClassicalType::A;
  std::size_t max_rank = 0;
  long copies = 0;  // not_vain only
  std::vector<SweepEntry> entries;
  std::vector<SweepEntry> violations;
  std::vector<SweepEntry> equality_cases;
  /// bril_takiff only: the codimension restatement agreed on every orbit.
  bool codim_form_agrees = true;
  bool ok() const { return violations.empty() && codim_form_agrees; }
};

/// Every orbit of every rank from the smallest supported one (A, B, C: 1;
/// D: 2) up to max_rank. brilliant reads type as the fixed algebra g0 of the
/// pair. Runs on `jobs` threads; the report does not depend on it.
SweepReport sweep(Inequality q, ClassicalType type, std::size_t max_rank, unsigned jobs = 1);
/// dim z(x) - rk g - n (rk g - rk(d pi)_x) >= 0 over the same range.
SweepReport not_vain_bounds(ClassicalType type, std::size_t max_rank, long copies, unsigned jobs = 1);

/// Columns: partition, rank, centralizer_dim, rank_dpi, L, stratum.
std::string to_tsv(const SweepReport& r);
/// {"inequality", "type", "max_rank", "checked", "violations", "equality_cases", ...}
std::string to_json(const SweepReport& r);

}  // namespace takiff_lab

#include "takiff/builders.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>
#include <unordered_map>

namespace takiff_lab {

namespace {

using SparseEntries = std::vector<std::pair<std::size_t, Rational>>;

SparseEntries to_sparse(const Matrix& m) {
  SparseEntries out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) out.emplace_back(i * m.cols() + j, m(i, j));
    }
  return out;
}

SparseEntries sparse_commutator(const SparseEntries& a, const SparseEntries& b, std::size_t n) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [p1, v1] : a) {
    const std::size_t r1 = p1 / n, c1 = p1 % n;
    for (const auto& [p2, v2] : b) {
      const std::size_t r2 = p2 / n, c2 = p2 % n;
      if (c1 == r2) acc[r1 * n + c2] += v1 * v2;
      if (c2 == r1) acc[r2 * n + c1] -= v1 * v2;
    }
  }
  SparseEntries out;
  for (auto& [p, v] : acc) {
    if (sgn(v) != 0) out.emplace_back(p, std::move(v));
  }
  return out;
}

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

}  // namespace

MatrixSpace::MatrixSpace(std::size_t n, std::vector<Matrix> basis) : n_(n), basis_(std::move(basis)) {
  for (const auto& b : basis_) {
    if (b.rows() != n_ || b.cols() != n_) throw std::invalid_argument("MatrixSpace: basis matrix has wrong size");
    sparse_.push_back(to_sparse(b));
  }
  // Fast path: every basis matrix owns an entry equal to 1 that no other
  // basis matrix touches.
  std::unordered_map<std::size_t, std::size_t> touch;
  for (const auto& s : sparse_)
    for (const auto& [p, v] : s) ++touch[p];
  bool fast = true;
  std::vector<std::size_t> own(basis_.size());
  for (std::size_t k = 0; k < sparse_.size() && fast; ++k) {
    auto it = std::find_if(sparse_[k].begin(), sparse_[k].end(),
                           [&](const auto& e) { return e.second == 1 && touch[e.first] == 1; });
    if (it == sparse_[k].end()) {
      fast = false;
    } else {
      own[k] = it->first;
    }
  }
  if (fast) {
    for (std::size_t k = 0; k < own.size(); ++k) {
      pivot_index_[own[k]] = k;
      pivot_positions_.push_back(own[k]);
      inverse_.push_back({{k, Rational(1)}});
    }
    return;
  }
  std::vector<Vector> rows;
  for (const auto& b : basis_) rows.push_back(flatten(b));
  const EchelonForm ef = rref(Matrix::from_rows(rows, n_ * n_));
  if (ef.pivots.size() != basis_.size()) throw std::invalid_argument("MatrixSpace: basis is linearly dependent");
  const std::size_t d = basis_.size();
  Matrix sub(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t t = 0; t < d; ++t) sub(k, t) = rows[k][ef.pivots[t]];
  const Matrix inv = inverse(sub);
  for (std::size_t t = 0; t < d; ++t) {
    pivot_index_[ef.pivots[t]] = t;
    pivot_positions_.push_back(ef.pivots[t]);
    SparseEntries row;
    for (std::size_t k = 0; k < d; ++k) {
      if (sgn(inv(t, k)) != 0) row.emplace_back(k, inv(t, k));
    }
    inverse_.push_back(std::move(row));
  }
}

Matrix MatrixSpace::element(const Vector& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("MatrixSpace::element: dimension mismatch");
  Matrix m(n_, n_);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    for (const auto& [p, v] : sparse_[k]) m(p / n_, p % n_) += coords[k] * v;
  }
  return m;
}

Vector MatrixSpace::coordinates_of_sparse(const SparseEntries& entries) const {
  Vector c = zero_vector(dim());
  for (const auto& [p, v] : entries) {
    auto it = pivot_index_.find(p);
    if (it == pivot_index_.end()) continue;
    for (const auto& [k, w] : inverse_[it->second]) c[k] += v * w;
  }
  return c;
}

Vector MatrixSpace::coordinates(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw std::invalid_argument("MatrixSpace::coordinates: wrong matrix size");
  Vector c = coordinates_of_sparse(to_sparse(m));
  if (!(element(c) == m)) throw std::invalid_argument("MatrixSpace::coordinates: matrix is not in the span");
  return c;
}

bool MatrixSpace::contains(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) return false;
  return element(coordinates_of_sparse(to_sparse(m))) == m;
}

std::vector<SparseEntries> MatrixSpace::coordinate_functionals() const {
  std::vector<SparseEntries> out(dim());
  for (std::size_t t = 0; t < pivot_positions_.size(); ++t)
    for (const auto& [k, w] : inverse_[t]) out[k].emplace_back(pivot_positions_[t], w);
  return out;
}

std::vector<Matrix> MatrixSpace::commutator_action(const MatrixSpace& module) const {
  if (module.n_ != n_) throw std::invalid_argument("commutator_action: matrix size mismatch");
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < dim(); ++a) {
    Matrix r(module.dim(), module.dim());
    for (std::size_t b = 0; b < module.dim(); ++b) {
      const Vector c = module.coordinates_of_sparse(sparse_commutator(sparse_[a], module.sparse_[b], n_));
      for (std::size_t k = 0; k < c.size(); ++k) r(k, b) = c[k];
    }
    out.push_back(std::move(r));
  }
  return out;
}

LieAlgebra MatrixSpace::bracket_algebra(std::vector<std::string> labels) const {
  std::vector<StructureEntry> entries;
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a + 1; b < dim(); ++b) {
      const Vector c = coordinates_of_sparse(sparse_commutator(sparse_[a], sparse_[b], n_));
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) != 0) entries.push_back({a, b, k, c[k]});
      }
    }
  return LieAlgebra(std::move(labels), entries);
}

char type_letter(ClassicalType t) {
  switch (t) {
    case ClassicalType::A: return 'A';
    case ClassicalType::B: return 'B';
    case ClassicalType::C: return 'C';
    case ClassicalType::D: return 'D';
  }
  return '?';
}

ClassicalType parse_type_letter(char c) {
  switch (c) {
    case 'A': return ClassicalType::A;
    case 'B': return ClassicalType::B;
    case 'C': return ClassicalType::C;
    case 'D': return ClassicalType::D;
    default: throw std::invalid_argument(std::string("unknown classical type '") + c + "'");
  }
}

const Representation& ClassicalAlgebra::rep(const std::string& name) const {
  auto it = rep_catalog.find(name);
  if (it == rep_catalog.end()) {
    throw std::invalid_argument("no representation '" + name + "' for type " + type_letter(type) + std::to_string(rank));
  }
  return it->second;
}

Matrix split_symmetric_form(std::size_t n) {
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) s(i, n - 1 - i) = 1;
  return s;
}

Matrix split_skew_form(std::size_t n) {
  if (n % 2 != 0) throw std::invalid_argument("split_skew_form: size must be even");
  Matrix j(n, n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = i < n / 2 ? 1 : -1;
  return j;
}

namespace {

void add_standard_reps(ClassicalAlgebra& ca) {
  ca.rep_catalog.emplace("defining", Representation(ca.base, ca.matrices.basis(), "defining"));
  Representation ad = adjoint_representation(ca.base);
  ca.rep_catalog.emplace("coadjoint", Representation(ca.base, dual_representation(ad).action(), "coadjoint"));
  ca.rep_catalog.emplace("adjoint", std::move(ad));
  ca.rep_catalog.emplace("trivial", trivial_representation(ca.base, 1));
}

std::string position_label(const std::string& prefix, std::size_t a, std::size_t b) {
  return prefix + std::to_string(a) + "_" + std::to_string(b);
}

}  // namespace

ClassicalAlgebra form_algebra(const BilinearForm& form, ClassicalType type, std::size_t rank) {
  const Matrix& g = form.matrix;
  const std::size_t n = g.rows();
  if (!form.matches_kind() || !form.is_nondegenerate()) {
    throw std::invalid_argument("form_algebra: form must be nondegenerate and match its kind");
  }
  std::vector<std::size_t> pi(n);
  std::vector<Rational> gv(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(g(i, j)) != 0) {
        pi[i] = j;
        gv[i] = g(i, j);
        ++count;
      }
    }
    if (count != 1) throw std::invalid_argument("form_algebra: form must have one nonzero entry per row");
  }
  // X^T G + G X = 0 couples X[a][b] only with X[pi b][pi a]:
  //   g[pi a] X[a][b] + g[pi b] X[pi b][pi a] = 0.
  // The self-adjoint condition G X = X^T G flips the sign of the second term.
  std::vector<Matrix> alg_basis, mod_basis;
  std::vector<std::string> alg_labels, mod_labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ta = pi[b], tb = pi[a];
      const std::size_t f = a * n + b, ft = ta * n + tb;
      const Rational& ga = gv[pi[a]];
      const Rational& gb = gv[pi[b]];
      if (f == ft) {
        if (sgn(ga + gb) == 0) {
          alg_basis.push_back(unit_matrix(n, a, b));
          alg_labels.push_back(position_label("m", a, b));
        }
        if (sgn(ga - gb) == 0) {
          mod_basis.push_back(unit_matrix(n, a, b));
          mod_labels.push_back(position_label("y", a, b));
        }
      } else if (f < ft) {
        Matrix x = unit_matrix(n, a, b);
        x(ta, tb) = -ga / gb;
        alg_basis.push_back(std::move(x));
        alg_labels.push_back(position_label("m", a, b));
        Matrix y = unit_matrix(n, a, b);
        y(ta, tb) = ga / gb;
        mod_basis.push_back(std::move(y));
        mod_labels.push_back(position_label("y", a, b));
      }
    }
  // Traceless part: subtract a multiple of the first basis matrix with
  // nonzero trace and drop it.
  std::size_t k0 = mod_basis.size();
  for (std::size_t k = 0; k < mod_basis.size(); ++k) {
    if (sgn(trace(mod_basis[k])) != 0) {
      k0 = k;
      break;
    }
  }
  if (k0 < mod_basis.size()) {
    const Matrix w0 = mod_basis[k0];
    const Rational t0 = trace(w0);
    std::vector<Matrix> reduced;
    std::vector<std::string> reduced_labels;
    for (std::size_t k = 0; k < mod_basis.size(); ++k) {
      if (k == k0) continue;
      const Rational tk = trace(mod_basis[k]);
      reduced.push_back(sgn(tk) == 0 ? mod_basis[k] : mod_basis[k] - (tk / t0) * w0);
      reduced_labels.push_back(mod_labels[k]);
    }
    mod_basis = std::move(reduced);
    mod_labels = std::move(reduced_labels);
  }

  ClassicalAlgebra ca;
  ca.type = type;
  ca.rank = rank;
  ca.n_defining = n;
  ca.form = form;
  ca.matrices = MatrixSpace(n, std::move(alg_basis));
  ca.base = ca.matrices.bracket_algebra(std::move(alg_labels));
  add_standard_reps(ca);
  ca.form_module = MatrixSpace(n, std::move(mod_basis));
  const std::string name = form.kind == FormKind::symmetric ? "sym2_traceless" : "wedge2_reduced";
  ca.rep_catalog.emplace(name, Representation(ca.base, ca.matrices.commutator_action(ca.form_module), name));
  return ca;
}

ClassicalAlgebra classical(ClassicalType type, std::size_t rank, std::size_t max_rank) {
  const std::size_t min_rank = type == ClassicalType::D ? 2 : 1;
  if (rank < min_rank || rank > max_rank) {
    throw std::invalid_argument(std::string("unsupported rank for type ") + type_letter(type) + ": " +
                                std::to_string(rank));
  }
  switch (type) {
    case ClassicalType::A: {
      const std::size_t n = rank + 1;
      std::vector<Matrix> basis;
      std::vector<std::string> labels;
      for (int lower = 0; lower < 2; ++lower)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if ((lower == 0 && i < j) || (lower == 1 && i > j)) {
              basis.push_back(unit_matrix(n, i, j));
              labels.push_back(position_label("E", i, j));
            }
          }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Matrix h(n, n);
        h(i, i) = 1;
        h(i + 1, i + 1) = -1;
        basis.push_back(std::move(h));
        labels.push_back("H" + std::to_string(i));
      }
      ClassicalAlgebra ca;
      ca.type = type;
      ca.rank = rank;
      ca.n_defining = n;
      ca.matrices = MatrixSpace(n, std::move(basis));
      ca.base = ca.matrices.bracket_algebra(std::move(labels));
      add_standard_reps(ca);
      return ca;
    }
    case ClassicalType::B:
      return form_algebra({split_symmetric_form(2 * rank + 1), FormKind::symmetric}, type, rank);
    case ClassicalType::C:
      return form_algebra({split_skew_form(2 * rank), FormKind::skew}, type, rank);
    case ClassicalType::D:
      return form_algebra({split_symmetric_form(2 * rank), FormKind::symmetric}, type, rank);
  }
  throw std::invalid_argument("unknown classical type");
}

LieAlgebra heisenberg(std::size_t n) {
  if (n < 1) throw std::invalid_argument("heisenberg: n must be >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("f" + std::to_string(i));
  labels.push_back("z");
  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, n + i, 2 * n, Rational(1)});
  return LieAlgebra(std::move(labels), entries);
}

LieAlgebra borel(const ClassicalAlgebra& ca) {
  if (ca.type != ClassicalType::A) throw std::invalid_argument("borel: only type A is supported");
  std::vector<Vector> span;
  std::vector<std::string> labels;
  const std::size_t d = ca.base.dim();
  for (std::size_t k = 0; k < d; ++k) {
    const Matrix& m = ca.matrices.basis()[k];
    bool upper = true;
    for (std::size_t i = 0; i < m.rows() && upper; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        if (sgn(m(i, j)) != 0) {
          upper = false;
          break;
        }
      }
    if (upper) {
      span.push_back(unit_vector(d, k));
      labels.push_back(ca.base.labels()[k]);
    }
  }
  return induced_subalgebra(ca.base, SubspaceBasis::span(d, span), std::move(labels));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "_1");
  for (const auto& l : b.labels()) labels.push_back(l + "_2");
  std::vector<StructureEntry> entries = a.entries();
  const std::size_t off = a.dim();
  for (auto e : b.entries()) entries.push_back({e.i + off, e.j + off, e.k + off, e.value});
  return LieAlgebra(std::move(labels), entries);
}

SemidirectData semidirect(const LieAlgebra& alg, const Representation& rep) {
  if (!(rep.algebra() == alg)) throw std::invalid_argument("semidirect: representation is over a different algebra");
  if (!check_homomorphism(rep).ok) throw std::invalid_argument("semidirect: action is not a Lie algebra homomorphism");
  const std::size_t d = alg.dim(), m = rep.dim_module();
  std::vector<std::string> labels = alg.labels();
  for (std::size_t b = 0; b < m; ++b) labels.push_back("v" + std::to_string(b));
  std::vector<StructureEntry> entries = alg.entries();
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix& act = rep.action(i);
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        if (sgn(act(c, b)) != 0) entries.push_back({i, d + b, d + c, act(c, b)});
      }
  }
  SemidirectData sd;
  sd.total = LieAlgebra(std::move(labels), entries);
  std::vector<Vector> a, v;
  for (std::size_t i = 0; i < d; ++i) a.push_back(unit_vector(d + m, i));
  for (std::size_t b = 0; b < m; ++b) v.push_back(unit_vector(d + m, d + b));
  sd.embed_algebra = SubspaceBasis::span(d + m, a);
  sd.embed_module = SubspaceBasis::span(d + m, v);
  sd.source_rep = rep;
  return sd;
}

TakiffData takiff(const LieAlgebra& alg, std::size_t n) {
  if (n < 1) throw std::invalid_argument("takiff: level must be >= 1");
  const std::size_t d = alg.dim();
  std::vector<std::string> labels;
  for (std::size_t j = 0; j <= n; ++j)
    for (const auto& l : alg.labels()) labels.push_back(l + "." + std::to_string(j));
  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      const auto& br = alg.basis_bracket(i, j);
      if (br.empty()) continue;
      for (std::size_t l = 0; l <= n; ++l)
        for (std::size_t k = 0; l + k <= n; ++k) {
          const std::size_t a = l * d + i, b = k * d + j;
          if (a >= b) continue;
          for (const auto& [c, v] : br) entries.push_back({a, b, (l + k) * d + c, v});
        }
    }
  TakiffData tk;
  tk.total = LieAlgebra(std::move(labels), entries);
  tk.source = alg;
  tk.level = n;
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<Vector> layer;
    for (std::size_t i = 0; i < d; ++i) layer.push_back(unit_vector((n + 1) * d, j * d + i));
    tk.layer_bases.push_back(SubspaceBasis::span((n + 1) * d, layer));
  }
  return tk;
}

Representation takiffize_module(const Representation& rep, const TakiffData& tk) {
  if (tk.level != 1) throw std::invalid_argument("takiffize_module: needs the level-1 Takiff algebra");
  if (!(tk.source == rep.algebra())) throw std::invalid_argument("takiffize_module: Takiff algebra is over a different algebra");
  const std::size_t d = tk.source.dim(), m = rep.dim_module();
  std::vector<Matrix> act(2 * d, Matrix(2 * m, 2 * m));
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix& r = rep.action(i);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (sgn(r(a, b)) == 0) continue;
        act[i](a, b) = r(a, b);
        act[i](m + a, m + b) = r(a, b);
        act[d + i](m + a, b) = -r(a, b);
      }
  }
  return Representation(tk.total, std::move(act), rep.name().empty() ? "takiffized" : "takiffized_" + rep.name());
}

InvolutionReport check_involution(const Involution& inv) {
  InvolutionReport rep;
  const std::size_t n = inv.algebra.dim();
  if (inv.matrix.rows() != n || inv.matrix.cols() != n) return rep;
  rep.squares_to_identity = inv.matrix * inv.matrix == Matrix::identity(n);
  rep.preserves_bracket = true;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(inv.matrix.column(i));
  for (std::size_t i = 0; i < n && rep.preserves_bracket; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(inv.matrix * bracket(inv.algebra, unit_vector(n, i), unit_vector(n, j)) ==
            bracket(inv.algebra, images[i], images[j]))) {
        rep.preserves_bracket = false;
        break;
      }
    }
  return rep;
}

Involution standard_involution(InvolutionKind kind, std::size_t sl_rank) {
  if (kind == InvolutionKind::swap) {
    Involution inv = swap_involution(classical(ClassicalType::A, sl_rank).base);
    return inv;
  }
  ClassicalAlgebra ca = classical(ClassicalType::A, sl_rank);
  const std::size_t n = ca.n_defining;
  if (kind == InvolutionKind::symplectic && n % 2 != 0) {
    throw std::invalid_argument("symplectic involution needs sl_N with N even");
  }
  const Matrix g = kind == InvolutionKind::orthogonal ? split_symmetric_form(n) : split_skew_form(n);
  const Matrix g_inv = inverse(g);
  const std::size_t d = ca.base.dim();
  Matrix theta(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const Matrix img = Rational(-1) * (g_inv * ca.matrices.basis()[k].transpose() * g);
    const Vector c = ca.coordinates(img);
    for (std::size_t i = 0; i < d; ++i) theta(i, k) = c[i];
  }
  Involution inv{ca.base, std::move(theta), kind == InvolutionKind::orthogonal ? "so" : "sp", ca};
  return inv;
}

Involution swap_involution(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  Matrix theta(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    theta(d + i, i) = 1;
    theta(i, d + i) = 1;
  }
  return Involution{direct_sum(g, g), std::move(theta), "swap", std::nullopt};
}

SemidirectData z2_contraction(const Involution& inv) {
  if (!check_involution(inv).ok()) throw std::invalid_argument("z2_contraction: not an involutive automorphism");
  const std::size_t n = inv.algebra.dim();
  const Matrix id = Matrix::identity(n);
  const SubspaceBasis g0 = SubspaceBasis::null_space(inv.matrix - id);
  const SubspaceBasis g1 = SubspaceBasis::null_space(inv.matrix + id);
  if (g0.dim() + g1.dim() != n) throw std::invalid_argument("z2_contraction: eigenspaces do not span the algebra");
  std::vector<std::string> l0, l1;
  for (std::size_t a = 0; a < g0.dim(); ++a) l0.push_back("k" + std::to_string(a));
  for (std::size_t b = 0; b < g1.dim(); ++b) l1.push_back("p" + std::to_string(b));
  const LieAlgebra h = induced_subalgebra(inv.algebra, g0, l0);
  std::vector<Matrix> act;
  for (const auto& x : g0.vectors()) {
    Matrix r(g1.dim(), g1.dim());
    for (std::size_t b = 0; b < g1.dim(); ++b) {
      const Vector y = bracket(inv.algebra, x, g1.vectors()[b]);
      if (!g1.contains(y)) throw std::invalid_argument("z2_contraction: [g0, g1] is not inside g1");
      const Vector c = g1.coordinates(y);
      for (std::size_t k = 0; k < c.size(); ++k) r(k, b) = c[k];
    }
    act.push_back(std::move(r));
  }
  SemidirectData sd = semidirect(h, Representation(h, std::move(act), inv.name + "_g1"));
  std::vector<std::string> labels = l0;
  labels.insert(labels.end(), l1.begin(), l1.end());
  sd.total = LieAlgebra(std::move(labels), sd.total.entries());
  ContractionOrigin origin;
  origin.ambient = inv.algebra;
  origin.g0 = g0;
  origin.g1 = g1;
  std::vector<Vector> cols = g0.vectors();
  cols.insert(cols.end(), g1.vectors().begin(), g1.vectors().end());
  origin.to_ambient = Matrix::from_columns(cols, n);
  origin.matrix_model = inv.matrix_model;
  sd.origin = std::move(origin);
  return sd;
}

std::vector<int> jordan_type(const Matrix& x) {
  const std::size_t n = x.rows();
  std::vector<std::size_t> ranks{n};
  Matrix p = Matrix::identity(n);
  while (ranks.back() > 0) {
    p = p * x;
    const std::size_t r = rank(p);
    if (r == ranks.back()) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    ranks.push_back(r);
  }
  ranks.push_back(0);
  std::vector<int> parts;
  for (std::size_t k = ranks.size() - 2; k >= 1; --k) {
    const std::size_t at_least_k = ranks[k - 1] - ranks[k];
    const std::size_t at_least_k1 = ranks[k] - ranks[k + 1];
    for (std::size_t c = 0; c < at_least_k - at_least_k1; ++c) parts.push_back(static_cast<int>(k));
  }
  return parts;
}

NilpotentModel nilpotent_from_partition(ClassicalType type, const std::vector<int>& parts_in) {
  std::vector<int> parts = parts_in;
  std::sort(parts.rbegin(), parts.rend());
  if (parts.empty() || parts.back() < 1) throw std::invalid_argument("partition parts must be positive");
  std::size_t n = 0;
  for (int p : parts) n += static_cast<std::size_t>(p);
  auto multiplicity = [&](int k) { return std::count(parts.begin(), parts.end(), k); };
  // Parts of the "paired" parity must have even multiplicity.
  const bool orthogonal = type == ClassicalType::B || type == ClassicalType::D;
  if (type != ClassicalType::A) {
    for (int p : parts) {
      const bool paired = orthogonal ? p % 2 == 0 : p % 2 == 1;
      if (paired && multiplicity(p) % 2 != 0) {
        throw std::invalid_argument(std::string("partition violates the parity rule for type ") + type_letter(type));
      }
    }
  }
  std::size_t rank = 0;
  switch (type) {
    case ClassicalType::A:
      if (n < 2) throw std::invalid_argument("type A needs a partition of at least 2");
      rank = n - 1;
      break;
    case ClassicalType::B:
      if (n % 2 == 0 || n < 3) throw std::invalid_argument("type B needs an odd partition size >= 3");
      rank = (n - 1) / 2;
      break;
    case ClassicalType::C:
      if (n % 2 != 0) throw std::invalid_argument("type C needs an even partition size");
      rank = n / 2;
      break;
    case ClassicalType::D:
      if (n % 2 != 0 || n < 4) throw std::invalid_argument("type D needs an even partition size >= 4");
      rank = n / 2;
      break;
  }

  Matrix x(n, n);
  if (type == ClassicalType::A) {
    std::size_t off = 0;
    for (int p : parts) {
      for (int i = 0; i + 1 < p; ++i) x(off + i, off + i + 1) = 1;
      off += static_cast<std::size_t>(p);
    }
    NilpotentModel nm{classical(ClassicalType::A, rank, rank), {}, x};
    nm.x = nm.algebra.coordinates(x);
    return nm;
  }

  Matrix g(n, n);
  const int eps = orthogonal ? 1 : -1;
  std::size_t off = 0;
  for (std::size_t idx = 0; idx < parts.size();) {
    const int k = parts[idx];
    const bool paired = orthogonal ? k % 2 == 0 : k % 2 == 1;
    const std::size_t ku = static_cast<std::size_t>(k);
    if (!paired) {
      // Single block with G[i][k-1-i] = (-1)^i: symmetric for odd k, skew for even k.
      for (std::size_t i = 0; i + 1 < ku; ++i) x(off + i, off + i + 1) = 1;
      for (std::size_t i = 0; i < ku; ++i) g(off + i, off + ku - 1 - i) = i % 2 == 0 ? 1 : -1;
      off += ku;
      idx += 1;
    } else {
      // diag(N, -N^T) with pairing [[0, I], [eps I, 0]].
      for (std::size_t i = 0; i + 1 < ku; ++i) {
        x(off + i, off + i + 1) = 1;
        x(off + ku + i + 1, off + ku + i) = -1;
      }
      for (std::size_t i = 0; i < ku; ++i) {
        g(off + i, off + ku + i) = 1;
        g(off + ku + i, off + i) = eps;
      }
      off += 2 * ku;
      idx += 2;
    }
  }
  NilpotentModel nm{form_algebra({g, orthogonal ? FormKind::symmetric : FormKind::skew}, type, rank), {}, x};
  nm.x = nm.algebra.coordinates(x);
  if (jordan_type(x) != parts) throw std::logic_error("nilpotent_from_partition: Jordan type mismatch");
  return nm;
}

namespace {

struct Atom {
  LieAlgebra algebra;
  std::optional<ClassicalAlgebra> classical;
  std::optional<std::size_t> heisenberg_n;
};

std::size_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), ::isdigit)) {
    throw std::invalid_argument("bad " + what + " '" + s + "'");
  }
  return static_cast<std::size_t>(std::stoul(s));
}

Atom parse_atom(const std::string& s) {
  static const std::regex classical_re("([ABCD])([0-9]+)");
  static const std::regex heis_re("heis([0-9]+)");
  std::smatch m;
  if (std::regex_match(s, m, classical_re)) {
    ClassicalAlgebra ca = classical(parse_type_letter(m[1].str()[0]), parse_count(m[2].str(), "rank"));
    LieAlgebra alg = ca.base;
    return {alg, std::move(ca), std::nullopt};
  }
  if (std::regex_match(s, m, heis_re)) {
    const std::size_t n = parse_count(m[1].str(), "Heisenberg size");
    return {heisenberg(n), std::nullopt, n};
  }
  throw std::invalid_argument("unknown algebra '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

AlgebraBundle parse_descriptor(const std::string& descriptor) {
  const auto parts = split(descriptor, ':');
  AlgebraBundle b;
  b.descriptor = descriptor;
  const std::string& head = parts[0];
  if (parts.size() == 1) {
    Atom a = parse_atom(head);
    b.algebra = a.algebra;
    b.classical = std::move(a.classical);
    b.heisenberg_n = a.heisenberg_n;
    return b;
  }
  if (head == "borel" && parts.size() == 2) {
    Atom a = parse_atom(parts[1]);
    if (!a.classical || a.classical->type != ClassicalType::A) throw std::invalid_argument("borel: only type A is supported");
    b.algebra = borel(*a.classical);
    b.classical = std::move(a.classical);
    b.is_borel = true;
    return b;
  }
  if (head == "takiff" && parts.size() == 3) {
    Atom a = parse_atom(parts[1]);
    TakiffData tk = takiff(a.algebra, parse_count(parts[2], "Takiff level"));
    b.algebra = tk.total;
    b.takiff = std::move(tk);
    b.classical = std::move(a.classical);
    b.heisenberg_n = a.heisenberg_n;
    return b;
  }
  if (head == "z2" && parts.size() == 3) {
    Atom a = parse_atom(parts[1]);
    if (!a.classical || a.classical->type != ClassicalType::A) {
      throw std::invalid_argument("z2: the ambient algebra must be of type A");
    }
    InvolutionKind kind;
    if (parts[2] == "so") {
      kind = InvolutionKind::orthogonal;
    } else if (parts[2] == "sp") {
      kind = InvolutionKind::symplectic;
    } else if (parts[2] == "swap") {
      kind = InvolutionKind::swap;
    } else {
      throw std::invalid_argument("z2: unknown involution '" + parts[2] + "'");
    }
    Involution inv = standard_involution(kind, a.classical->rank);
    SemidirectData sd = z2_contraction(inv);
    b.algebra = sd.total;
    b.semidirect = std::move(sd);
    b.involution = std::move(inv);
    b.classical = std::move(a.classical);
    return b;
  }
  if (head == "sd" && parts.size() == 3) {
    Atom a = parse_atom(parts[1]);
    const std::string& rep_name = parts[2];
    Representation rep;
    if (a.classical) {
      rep = a.classical->rep(rep_name);
    } else if (rep_name == "adjoint") {
      rep = adjoint_representation(a.algebra);
    } else if (rep_name == "coadjoint") {
      rep = Representation(a.algebra, dual_representation(adjoint_representation(a.algebra)).action(), "coadjoint");
    } else if (rep_name == "trivial") {
      rep = trivial_representation(a.algebra, 1);
    } else {
      throw std::invalid_argument("sd: representation '" + rep_name + "' is not available for " + parts[1]);
    }
    SemidirectData sd = semidirect(a.algebra, rep);
    b.algebra = sd.total;
    b.semidirect = std::move(sd);
    b.classical = std::move(a.classical);
    b.heisenberg_n = a.heisenberg_n;
    return b;
  }
  throw std::invalid_argument("unknown algebra descriptor '" + descriptor + "'");
}

}  // namespace takiff_lab

#include "takiff/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "takiff/sampling.hpp"

namespace takiff_lab {

struct LieAlgebra::Data {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVector> table;  // dim*dim, entry (i, j) at i*dim + j
};

namespace {

void add_to(SparseVector& v, std::uint32_t k, const Rational& c) {
  auto it = std::lower_bound(v.begin(), v.end(), k, [](const auto& p, std::uint32_t key) { return p.first < key; });
  if (it != v.end() && it->first == k) {
    it->second += c;
    if (sgn(it->second) == 0) v.erase(it);
  } else if (sgn(c) != 0) {
    v.insert(it, {k, c});
  }
}

SparseVector negated(const SparseVector& v) {
  SparseVector r = v;
  for (auto& [k, c] : r) c = -c;
  return r;
}

}  // namespace

LieAlgebra::LieAlgebra() : data_(std::make_shared<Data>()) {}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const std::vector<StructureEntry>& entries) {
  auto d = std::make_shared<Data>();
  d->dim = labels.size();
  d->labels = std::move(labels);
  d->table.assign(d->dim * d->dim, {});
  for (const auto& e : entries) {
    if (e.i >= d->dim || e.j >= d->dim || e.k >= d->dim) throw std::invalid_argument("structure entry index out of range");
    if (e.i == e.j) throw std::invalid_argument("structure entry with i == j");
    if (e.i > e.j) continue;
    add_to(d->table[e.i * d->dim + e.j], static_cast<std::uint32_t>(e.k), e.value);
  }
  for (std::size_t i = 0; i < d->dim; ++i)
    for (std::size_t j = i + 1; j < d->dim; ++j) d->table[j * d->dim + i] = negated(d->table[i * d->dim + j]);
  data_ = std::move(d);
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels,
                                     const std::vector<std::vector<Vector>>& brackets) {
  std::vector<StructureEntry> entries;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = brackets.at(i).at(j).at(k);
        if (sgn(c) != 0) entries.push_back({i, j, k, c});
      }
  return LieAlgebra(std::move(labels), entries);
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return LieAlgebra(std::move(labels), {});
}

std::size_t LieAlgebra::dim() const { return data_->dim; }
const std::vector<std::string>& LieAlgebra::labels() const { return data_->labels; }

const SparseVector& LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  return data_->table.at(i * data_->dim + j);
}

std::vector<StructureEntry> LieAlgebra::entries() const {
  std::vector<StructureEntry> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      for (const auto& [k, c] : basis_bracket(i, j)) out.push_back({i, j, k, c});
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(data_->table.begin(), data_->table.end(), [](const auto& v) { return v.empty(); });
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->dim == b.data_->dim && a.data_->table == b.data_->table;
}

Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: dimension mismatch");
  Vector r = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || sgn(y[j]) == 0) continue;
      const auto& v = alg.basis_bracket(i, j);
      if (v.empty()) continue;
      const Rational s = x[i] * y[j];
      for (const auto& [k, c] : v) r[k] += s * c;
    }
  }
  return r;
}

namespace {

// [e_i, v] for sparse v
SparseVector bracket_with_basis(const LieAlgebra& alg, std::size_t i, const SparseVector& v) {
  SparseVector r;
  for (const auto& [l, c] : v) {
    if (l == i) continue;
    for (const auto& [k, d] : alg.basis_bracket(i, l)) add_to(r, k, c * d);
  }
  return r;
}

}  // namespace

JacobiReport check_jacobi(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVector sum = bracket_with_basis(alg, i, alg.basis_bracket(j, k));
        for (const auto& [l, c] : bracket_with_basis(alg, j, alg.basis_bracket(k, i))) add_to(sum, l, c);
        for (const auto& [l, c] : bracket_with_basis(alg, k, alg.basis_bracket(i, j))) add_to(sum, l, c);
        if (!sum.empty()) return {false, std::array<std::size_t, 3>{i, j, k}};
      }
  return {};
}

Matrix ad_matrix(const LieAlgebra& alg, const Vector& x) {
  const std::size_t n = alg.dim();
  if (x.size() != n) throw std::invalid_argument("ad_matrix: dimension mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const auto& [k, c] : alg.basis_bracket(i, j)) m(k, j) += x[i] * c;
    }
  }
  return m;
}

SubspaceBasis centralizer(const LieAlgebra& alg, const Vector& x) {
  return SubspaceBasis::null_space(ad_matrix(alg, x));
}

namespace {

Matrix stack(const std::vector<Matrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix m(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) m(r, j) = b(i, j);
  }
  return m;
}

}  // namespace

SubspaceBasis centralizer(const LieAlgebra& alg, const SubspaceBasis& sub) {
  std::vector<Matrix> blocks;
  for (const auto& s : sub.vectors()) blocks.push_back(ad_matrix(alg, s));
  if (blocks.empty()) return SubspaceBasis::whole(alg.dim());
  return SubspaceBasis::null_space(stack(blocks, alg.dim()));
}

SubspaceBasis center(const LieAlgebra& alg) { return centralizer(alg, SubspaceBasis::whole(alg.dim())); }

bool is_commutative(const SubspaceBasis& sub, const LieAlgebra& alg) {
  const auto& v = sub.vectors();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (!is_zero(bracket(alg, v[a], v[b]))) return false;
    }
  return true;
}

bool is_subalgebra(const SubspaceBasis& sub, const LieAlgebra& alg) {
  const auto& v = sub.vectors();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (!sub.contains(bracket(alg, v[a], v[b]))) return false;
    }
  return true;
}

SubspaceBasis normalizer(const LieAlgebra& alg, const SubspaceBasis& sub) {
  const Matrix ann = sub.annihilator();
  std::vector<Matrix> blocks;
  // [x, s] = -ad(s) x must be killed by every annihilating row.
  for (const auto& s : sub.vectors()) blocks.push_back(ann * ad_matrix(alg, s));
  if (blocks.empty() || ann.rows() == 0) return SubspaceBasis::whole(alg.dim());
  return SubspaceBasis::null_space(stack(blocks, alg.dim()));
}

SubspaceBasis bracket_span(const LieAlgebra& alg, const SubspaceBasis& a, const SubspaceBasis& b) {
  std::vector<Vector> out;
  for (const auto& x : a.vectors())
    for (const auto& y : b.vectors()) {
      Vector z = bracket(alg, x, y);
      if (!is_zero(z)) out.push_back(std::move(z));
    }
  return SubspaceBasis::span(alg.dim(), out);
}

LieAlgebra induced_subalgebra(const LieAlgebra& alg, const SubspaceBasis& sub, std::vector<std::string> labels) {
  const auto& v = sub.vectors();
  if (labels.empty()) {
    for (std::size_t a = 0; a < v.size(); ++a) labels.push_back("s" + std::to_string(a));
  }
  if (labels.size() != v.size()) throw std::invalid_argument("induced_subalgebra: label count mismatch");
  std::vector<StructureEntry> entries;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      const Vector z = bracket(alg, v[a], v[b]);
      if (!sub.contains(z)) throw std::invalid_argument("induced_subalgebra: subspace is not closed under the bracket");
      const Vector c = sub.coordinates(z);
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) != 0) entries.push_back({a, b, k, c[k]});
      }
    }
  return LieAlgebra(std::move(labels), entries);
}

LieAlgebra quotient_algebra(const LieAlgebra& alg, const SubspaceBasis& ideal) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& s : ideal.vectors()) {
      if (!ideal.contains(bracket(alg, unit_vector(n, i), s))) throw std::invalid_argument("quotient_algebra: not an ideal");
    }
  std::vector<bool> pivot(n, false);
  for (const auto& v : ideal.vectors()) {
    for (std::size_t p = 0; p < n; ++p) {
      if (sgn(v[p]) != 0) {
        pivot[p] = true;
        break;
      }
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) {
    if (!pivot[j]) keep.push_back(j);
  }
  auto reduce = [&](Vector v) {
    for (const auto& w : ideal.vectors()) {
      std::size_t p = 0;
      while (sgn(w[p]) == 0) ++p;
      if (sgn(v[p]) != 0) v = v - v[p] * w;
    }
    Vector out;
    for (auto j : keep) out.push_back(v[j]);
    return out;
  };
  std::vector<std::string> labels;
  for (auto j : keep) labels.push_back(alg.labels()[j]);
  std::vector<StructureEntry> entries;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      const Vector c = reduce(bracket(alg, unit_vector(n, keep[a]), unit_vector(n, keep[b])));
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) != 0) entries.push_back({a, b, k, c[k]});
      }
    }
  return LieAlgebra(std::move(labels), entries);
}

bool BilinearForm::matches_kind() const {
  if (matrix.rows() != matrix.cols()) return false;
  const Matrix t = matrix.transpose();
  return kind == FormKind::symmetric ? t == matrix : t == Rational(-1) * matrix;
}

bool BilinearForm::is_nondegenerate() const {
  return matrix.rows() == matrix.cols() && rank(matrix) == matrix.rows();
}

BilinearForm kirillov_form(const LieAlgebra& alg, const Vector& xi) {
  const std::size_t n = alg.dim();
  if (xi.size() != n) throw std::invalid_argument("kirillov_form: dimension mismatch");
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = 0;
      for (const auto& [k, c] : alg.basis_bracket(i, j)) {
        if (sgn(xi[k]) != 0) s += xi[k] * c;
      }
      b(i, j) = s;
      b(j, i) = -s;
    }
  return {std::move(b), FormKind::skew};
}

IndexResult index_report(const LieAlgebra& alg, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("index: trials must be >= 1");
  IndexResult res;
  const std::size_t n = alg.dim();
  Sampler sampler(seed);
  bool first = true;
  for (std::size_t t = 0; t < trials; ++t) {
    Vector xi = sampler.vector(n, Sampler::height_for_trial(t));
    const std::size_t r = rank(kirillov_form(alg, xi).matrix);
    if (first || r > res.max_rank) {
      res.max_rank = r;
      res.best_covector = std::move(xi);
      first = false;
    }
  }
  res.index = n - res.max_rank;
  return res;
}

std::size_t index(const LieAlgebra& alg, std::size_t trials, std::uint64_t seed) {
  return index_report(alg, trials, seed).index;
}

Representation::Representation(LieAlgebra algebra, std::vector<Matrix> action, std::string name)
    : algebra_(std::move(algebra)), action_(std::move(action)), name_(std::move(name)) {
  if (action_.size() != algebra_.dim()) throw std::invalid_argument("Representation: one action matrix per basis element required");
  dim_module_ = action_.empty() ? 0 : action_.front().rows();
  for (const auto& m : action_) {
    if (m.rows() != dim_module_ || m.cols() != dim_module_) throw std::invalid_argument("Representation: action matrices must be square of equal size");
  }
}

Matrix Representation::act(const Vector& x) const {
  if (x.size() != action_.size()) throw std::invalid_argument("Representation::act: dimension mismatch");
  Matrix m(dim_module_, dim_module_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) m = m + x[i] * action_[i];
  }
  return m;
}

HomomorphismReport check_homomorphism(const Representation& rep) {
  const auto& alg = rep.algebra();
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs(rep.dim_module(), rep.dim_module());
      for (const auto& [k, c] : alg.basis_bracket(i, j)) lhs = lhs + c * rep.action(k);
      if (!(lhs == commutator(rep.action(i), rep.action(j)))) return {false, std::pair{i, j}};
    }
  return {};
}

Representation adjoint_representation(const LieAlgebra& alg) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < alg.dim(); ++i) act.push_back(ad_matrix(alg, unit_vector(alg.dim(), i)));
  return Representation(alg, std::move(act), "adjoint");
}

Representation dual_representation(const Representation& rep) {
  std::vector<Matrix> act;
  for (const auto& m : rep.action()) act.push_back(Rational(-1) * m.transpose());
  return Representation(rep.algebra(), std::move(act), rep.name().empty() ? "dual" : "dual_" + rep.name());
}

Representation trivial_representation(const LieAlgebra& alg, std::size_t dim) {
  return Representation(alg, std::vector<Matrix>(alg.dim(), Matrix(dim, dim)), "trivial");
}

SubspaceBasis fixed_space(const Representation& rep, const SubspaceBasis& sub) {
  std::vector<Matrix> blocks;
  for (const auto& s : sub.vectors()) blocks.push_back(rep.act(s));
  if (blocks.empty()) return SubspaceBasis::whole(rep.dim_module());
  return SubspaceBasis::null_space(stack(blocks, rep.dim_module()));
}

SubspaceBasis fixed_space(const Representation& rep, const Vector& x) {
  return SubspaceBasis::null_space(rep.act(x));
}

std::string to_json(const LieAlgebra& alg) {
  nlohmann::json j;
  j["dim"] = alg.dim();
  j["labels"] = alg.labels();
  nlohmann::json s = nlohmann::json::array();
  for (const auto& e : alg.entries()) s.push_back({e.i, e.j, e.k, to_string(e.value)});
  j["structure"] = std::move(s);
  return j.dump();
}

LieAlgebra algebra_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("algebra JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("labels") || !j.contains("structure")) {
    throw std::invalid_argument("algebra JSON: expected keys dim, labels, structure");
  }
  const auto dim = j["dim"].get<std::size_t>();
  auto labels = j["labels"].get<std::vector<std::string>>();
  if (labels.size() != dim) throw std::invalid_argument("algebra JSON: dim does not match label count");
  std::vector<StructureEntry> entries;
  for (const auto& row : j["structure"]) {
    if (!row.is_array() || row.size() != 4) throw std::invalid_argument("algebra JSON: structure rows are [i, j, k, \"p/q\"]");
    StructureEntry e{row[0].get<std::size_t>(), row[1].get<std::size_t>(), row[2].get<std::size_t>(),
                     parse_rational(row[3].is_string() ? row[3].get<std::string>() : row[3].dump())};
    if (e.i >= e.j) throw std::invalid_argument("algebra JSON: structure rows must have i < j");
    entries.push_back(std::move(e));
  }
  return LieAlgebra(std::move(labels), entries);
}

}  // namespace takiff_lab

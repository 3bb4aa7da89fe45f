#include "takiff/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace takiff_lab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) != 0) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vector r = zero_vector(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (sgn(a(i, j)) != 0) r[i] += a(i, j) * v[j];
    }
  }
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rational trace(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Matrix power(const Matrix& a, unsigned k) {
  if (a.rows() != a.cols()) throw std::invalid_argument("power of a non-square matrix");
  Matrix r = Matrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

Vector flatten(const Matrix& a) {
  Vector v;
  v.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators.
IntRows integer_rows(const Matrix& a) {
  IntRows rows(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  return rows;
}

struct BareissResult {
  IntRows rows;
  std::vector<std::size_t> pivots;
  int swap_sign = 1;
};

// Fraction-free row echelon form; every division below is exact because the
// entries are minors of the input.
BareissResult bareiss(IntRows rows, std::size_t cols) {
  BareissResult res;
  const std::size_t m = rows.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(rows[p][c]) == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      std::swap(rows[p], rows[r]);
      res.swap_sign = -res.swap_sign;
    }
    const Integer& piv = rows[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      const Integer lead = rows[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = piv * rows[i][j];
        if (sgn(lead) != 0) t -= lead * rows[r][j];
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    res.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  res.rows = std::move(rows);
  return res;
}

}  // namespace

EchelonForm rref(const Matrix& a) {
  BareissResult b = bareiss(integer_rows(a), a.cols());
  const std::size_t r = b.pivots.size();
  Matrix red(r, a.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& piv = b.rows[i][b.pivots[i]];
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(b.rows[i][j]) != 0) {
        red(i, j) = Rational(b.rows[i][j], piv);
        red(i, j).canonicalize();
      }
    }
  }
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t pc = b.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = red(i, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t j = pc; j < a.cols(); ++j) {
        if (sgn(red(k, j)) != 0) red(i, j) -= f * red(k, j);
      }
    }
  }
  return {std::move(red), std::move(b.pivots)};
}

std::size_t rank(const Matrix& a) { return bareiss(integer_rows(a), a.cols()).pivots.size(); }

std::size_t rank(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(vectors, ambient_dim));
}

std::vector<Vector> kernel(const Matrix& a) {
  const EchelonForm e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const EchelonForm e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntRows rows = integer_rows(a);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    scale *= l;
  }
  BareissResult b = bareiss(std::move(rows), n);
  if (b.pivots.size() < n) return 0;
  Rational d(b.rows[n - 1][n - 1] * b.swap_sign, scale);
  d.canonicalize();
  return d;
}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  SubspaceBasis s(ambient_dim);
  if (vectors.empty()) return s;
  const EchelonForm e = rref(Matrix::from_rows(vectors, ambient_dim));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.vectors_.push_back(e.reduced.row(i));
  return s;
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim) {
  SubspaceBasis s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.vectors_.push_back(unit_vector(ambient_dim, i));
  return s;
}

SubspaceBasis SubspaceBasis::column_space(const Matrix& a) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  return span(a.rows(), cols);
}

SubspaceBasis SubspaceBasis::null_space(const Matrix& a) { return span(a.cols(), kernel(a)); }

namespace {

std::size_t leading_index(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) return i;
  }
  return v.size();
}

}  // namespace

Vector SubspaceBasis::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("coordinates: ambient dimension mismatch");
  Vector coords(vectors_.size());
  Vector residual = v;
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const std::size_t p = leading_index(vectors_[i]);
    coords[i] = residual[p];
    if (sgn(coords[i]) == 0) continue;
    for (std::size_t j = p; j < ambient_dim_; ++j) {
      if (sgn(vectors_[i][j]) != 0) residual[j] -= coords[i] * vectors_[i][j];
    }
  }
  if (!takiff_lab::is_zero(residual)) throw std::invalid_argument("coordinates: vector not in subspace");
  return coords;
}

bool SubspaceBasis::contains(const Vector& v) const {
  try {
    (void)coordinates(v);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  for (const auto& v : other.vectors()) {
    if (!contains(v)) return false;
  }
  return true;
}

Matrix SubspaceBasis::annihilator() const {
  if (vectors_.empty()) return Matrix::identity(ambient_dim_);
  const auto ann = kernel(Matrix::from_rows(vectors_, ambient_dim_));
  return Matrix::from_rows(ann, ambient_dim_);
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_sum: ambient mismatch");
  std::vector<Vector> all = a.vectors();
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  return SubspaceBasis::span(a.ambient_dim(), all);
}

std::size_t intersection_dim(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersection_dim: ambient mismatch");
  std::vector<Vector> all = a.vectors();
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  return a.dim() + b.dim() - rank(all, a.ambient_dim());
}

SubspaceBasis intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersection: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return SubspaceBasis(n);
  // Solve sum_i c_i a_i - sum_j d_j b_j = 0.
  Matrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.vectors()[i][r];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.vectors()[j][r];
  std::vector<Vector> out;
  for (const auto& c : kernel(m)) {
    Vector v = zero_vector(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (sgn(c[i]) != 0) v = v + c[i] * a.vectors()[i];
    }
    out.push_back(std::move(v));
  }
  return SubspaceBasis::span(n, out);
}

std::string to_string(const Matrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << to_string(a(i, j));
    os << "]\n";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& a) { return os << to_string(a); }

}  // namespace takiff_lab

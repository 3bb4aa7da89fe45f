#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "takiff/rational.hpp"

namespace takiff_lab {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  /// Rows given as vectors; all must share one length.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Columns given as vectors of length `rows`.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);
Rational trace(const Matrix& a);
Matrix power(const Matrix& a, unsigned k);
/// Stacks the entries row by row into a vector of length rows*cols.
Vector flatten(const Matrix& a);

/// Reduced row echelon form. The elimination runs fraction-free (Bareiss)
/// over integer-scaled rows; only the final back-substitution divides.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
EchelonForm rref(const Matrix& a);

/// Rank by fraction-free Bareiss elimination.
std::size_t rank(const Matrix& a);
std::size_t rank(const std::vector<Vector>& vectors, std::size_t ambient_dim);

/// Basis of {v : a v = 0}; one vector per free column, normalized so the free
/// coordinate is 1 (canonical for a given matrix).
std::vector<Vector> kernel(const Matrix& a);

/// Exact inverse. Throws std::domain_error when singular.
Matrix inverse(const Matrix& a);
Rational determinant(const Matrix& a);

/// Linearly independent spanning set of a subspace of k^ambient_dim, kept in
/// reduced row echelon form so equal subspaces have equal bases.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static SubspaceBasis whole(std::size_t ambient_dim);
  static SubspaceBasis column_space(const Matrix& a);
  static SubspaceBasis null_space(const Matrix& a);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  bool contains(const Vector& v) const;
  bool contains(const SubspaceBasis& other) const;
  /// Coordinates of v with respect to vectors(). Throws if v is not in the span.
  Vector coordinates(const Vector& v) const;
  /// Rows w of a matrix with ker = this subspace (w . v = 0 for all v in span).
  Matrix annihilator() const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vectors_ == b.vectors_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> vectors_;
};

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
/// dim(A cap B) = dim A + dim B - rank[A|B]
std::size_t intersection_dim(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis intersection(const SubspaceBasis& a, const SubspaceBasis& b);

std::string to_string(const Matrix& a);
std::ostream& operator<<(std::ostream& os, const Matrix& a);

}  // namespace takiff_lab

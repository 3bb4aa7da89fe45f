#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "takiff/rational.hpp"

namespace takiff_lab {

/// Dense exponent vector, one entry per variable.
using Monomial = std::vector<std::uint16_t>;

/// Graded lexicographic order: total degree first, then x0 > x1 > ...
bool grlex_less(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted in
/// descending graded-lex order with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}
  /// Combines like terms and drops zeros.
  Polynomial(std::size_t num_vars, std::vector<Term> terms);

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t i);
  /// sum_i coeffs[i] x_{offset + i}
  static Polynomial linear(std::size_t num_vars, const Vector& coeffs, std::size_t offset = 0);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(const Vector& point) const;
  /// Same polynomial viewed in `num_vars` variables with x_i renamed to
  /// x_{offset + i}.
  Polynomial embed(std::size_t num_vars, std::size_t offset) const;
  /// Terms whose weight sum_i w_i a_i equals `weight`.
  Polynomial weighted_part(const std::vector<unsigned>& weights, unsigned weight) const;
  /// Largest index of a variable that occurs, or -1 for a constant.
  long max_variable() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }

 private:
  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Product with every term of weight above max_weight dropped.
Polynomial truncated_product(const Polynomial& a, const Polynomial& b, const std::vector<unsigned>& weights,
                             unsigned max_weight);

/// p(images_0, ..., images_{n-1}); all images share one variable count. With
/// weights given, terms above max_weight are dropped along the way.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images,
                      const std::vector<unsigned>& weights = {}, unsigned max_weight = ~0u);

/// "3/2 * x0^2 x1 - x2 + 5"; coefficient always printed (as "1 * x0").
std::string to_string(const Polynomial& p);
/// Inverse of to_string. Throws std::invalid_argument on malformed input or a
/// variable index >= num_vars.
Polynomial parse_polynomial(const std::string& text, std::size_t num_vars);
/// {"num_vars": n, "terms": [["p/q", [[var, exp], ...]], ...]}
std::string to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);

/// Polynomial map k^domain -> k^codomain.
struct PolyMap {
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  std::vector<Polynomial> components;
};

/// Square matrix with polynomial entries.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t n, std::size_t num_vars);

  std::size_t n() const { return n_; }
  std::size_t num_vars() const { return num_vars_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  Polynomial trace() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t n_ = 0;
  std::size_t num_vars_ = 0;
  std::vector<Polynomial> entries_;
};

/// Pfaffian of a skew matrix of even size by expansion along the first row,
/// memoized on the set of remaining indices.
Polynomial pfaffian(const PolyMatrix& a);

}  // namespace takiff_lab

#include <gtest/gtest.h>

#include "takiff/linalg.hpp"
#include "takiff/polynomial.hpp"
#include "takiff/sampling.hpp"

using namespace takiff_lab;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Polynomial c(std::size_t n, long p, long q = 1) { return Polynomial::constant(n, ratio(p, q)); }

Polynomial random_poly(Sampler& s, std::size_t n, int terms, int max_deg) {
  Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    Polynomial m = c(n, s.integer(9), 1 + s.integer(3) + 3);
    const int deg = static_cast<int>(s.integer(max_deg) + max_deg) / 2;
    for (int k = 0; k < deg; ++k) m = m * x(n, static_cast<std::size_t>(s.integer(n) + n) % n);
    p += m;
  }
  return p;
}

}  // namespace

TEST(Polynomial, GrlexOrderAndCombination) {
  EXPECT_TRUE(grlex_less({0, 1}, {1, 0}));
  EXPECT_TRUE(grlex_less({1, 0}, {0, 2}));
  EXPECT_FALSE(grlex_less({1, 1}, {1, 1}));
  const Polynomial p = x(2, 0) + x(2, 1) - x(2, 0);
  EXPECT_EQ(p, x(2, 1));
  EXPECT_TRUE((x(3, 2) - x(3, 2)).is_zero());
  EXPECT_EQ((x(3, 2) - x(3, 2)).total_degree(), -1);
}

TEST(Polynomial, ArithmeticIdentities) {
  Sampler s(7);
  for (int t = 0; t < 20; ++t) {
    const Polynomial a = random_poly(s, 3, 4, 3), b = random_poly(s, 3, 4, 3), d = random_poly(s, 3, 3, 2);
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_TRUE((a - a).is_zero());
    const Vector pt{ratio(1, 2), -3, ratio(5, 7)};
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST(Polynomial, DegreesAndHomogeneity) {
  const Polynomial p = x(2, 0) * x(2, 0) * x(2, 1) + c(2, 3);
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_TRUE((x(2, 0) * x(2, 1)).is_homogeneous());
  EXPECT_EQ(pow(x(2, 0) + x(2, 1), 3).terms().size(), 4u);
  EXPECT_EQ(p.max_variable(), 1);
  EXPECT_EQ(c(2, 3).max_variable(), -1);
}

TEST(Polynomial, DerivativeMatchesPowerRule) {
  const Polynomial p = pow(x(2, 0), 3) * x(2, 1) - ratio(1, 2) * x(2, 1);
  EXPECT_EQ(p.derivative(0), c(2, 3) * x(2, 0) * x(2, 0) * x(2, 1));
  EXPECT_EQ(p.derivative(1), pow(x(2, 0), 3) - c(2, 1, 2));
  EXPECT_TRUE(c(2, 5).derivative(0).is_zero());
}

TEST(Polynomial, EmbedAndWeightedPart) {
  const Polynomial p = x(2, 0) * x(2, 1);
  EXPECT_EQ(p.embed(5, 2), x(5, 2) * x(5, 3));
  const Polynomial q = x(3, 0) * x(3, 1) + x(3, 2) + x(3, 0);
  EXPECT_EQ(q.weighted_part({0, 1, 2}, 1), x(3, 0) * x(3, 1));
  EXPECT_EQ(q.weighted_part({0, 1, 2}, 0), x(3, 0));
}

TEST(Polynomial, TruncatedProductDropsHeavyTerms) {
  const std::vector<unsigned> w{0, 1};
  const Polynomial a = x(2, 0) + x(2, 1);
  const Polynomial full = a * a;
  EXPECT_EQ(truncated_product(a, a, w, 1), full - x(2, 1) * x(2, 1));
  EXPECT_EQ(truncated_product(a, a, w, 2), full);
}

TEST(Polynomial, SubstituteAgreesWithEvaluation) {
  Sampler s(3);
  const Polynomial p = random_poly(s, 2, 5, 4);
  const std::vector<Polynomial> img{x(3, 0) * x(3, 1) + c(3, 2), x(3, 2) - x(3, 0)};
  const Polynomial q = substitute(p, img);
  const Vector pt{2, ratio(-1, 3), 5};
  EXPECT_EQ(q.evaluate(pt), p.evaluate({img[0].evaluate(pt), img[1].evaluate(pt)}));
}

TEST(Polynomial, TextRoundTrip) {
  const Polynomial p = ratio(3, 2) * x(3, 0) * x(3, 0) * x(3, 1) - x(3, 2) + c(3, 5);
  EXPECT_EQ(to_string(p), "3/2 * x0^2 x1 - 1 * x2 + 5");
  EXPECT_EQ(parse_polynomial(to_string(p), 3), p);
  EXPECT_EQ(to_string(Polynomial(3)), "0");
  EXPECT_EQ(parse_polynomial("0", 3), Polynomial(3));
  EXPECT_THROW(parse_polynomial("1 * x3", 3), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("1 * y0", 3), std::invalid_argument);
  Sampler s(11);
  for (int t = 0; t < 10; ++t) {
    const Polynomial q = random_poly(s, 4, 5, 3);
    EXPECT_EQ(parse_polynomial(to_string(q), 4), q);
    EXPECT_EQ(polynomial_from_json(to_json(q)), q);
  }
}

TEST(Polynomial, PfaffianSmallCases) {
  const std::size_t nv = 6;
  PolyMatrix a(4, nv);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      a(i, j) = x(nv, k);
      a(j, i) = -x(nv, k);
      ++k;
    }
  // a01 a23 - a02 a13 + a03 a12 with variables ordered 01 02 03 12 13 23.
  EXPECT_EQ(pfaffian(a), x(nv, 0) * x(nv, 5) - x(nv, 1) * x(nv, 4) + x(nv, 2) * x(nv, 3));
  PolyMatrix odd(3, 1);
  EXPECT_THROW(pfaffian(odd), std::invalid_argument);
}

TEST(Polynomial, PfaffianSquaredIsDeterminant) {
  // Pf^2 = det on random integer skew matrices of size 6.
  Sampler s(5);
  for (int t = 0; t < 5; ++t) {
    PolyMatrix a(6, 1);
    Matrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j) {
        const long v = s.integer(5);
        a(i, j) = c(1, v);
        a(j, i) = c(1, -v);
        m(i, j) = v;
        m(j, i) = -v;
      }
    const Rational pf = pfaffian(a).evaluate({0});
    EXPECT_EQ(pf * pf, determinant(m));
  }
}

TEST(Polynomial, PolyMatrixTraceOfProduct) {
  PolyMatrix a(2, 4);
  for (std::size_t i = 0; i < 4; ++i) a(i / 2, i % 2) = x(4, i);
  const Polynomial tr2 = (a * a).trace();
  EXPECT_EQ(tr2, x(4, 0) * x(4, 0) + c(4, 2) * x(4, 1) * x(4, 2) + x(4, 3) * x(4, 3));
}

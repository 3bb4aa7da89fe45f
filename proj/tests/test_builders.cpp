#include <gtest/gtest.h>

#include "takiff/builders.hpp"

using namespace takiff_lab;

namespace {

std::size_t expected_dim(ClassicalType t, std::size_t r) {
  switch (t) {
    case ClassicalType::A: return (r + 1) * (r + 1) - 1;
    case ClassicalType::B: return r * (2 * r + 1);
    case ClassicalType::C: return r * (2 * r + 1);
    case ClassicalType::D: return r * (2 * r - 1);
  }
  return 0;
}

bool in_form_algebra(const Matrix& x, const Matrix& g) { return (x.transpose() * g + g * x).is_zero(); }

// All partitions of n into parts <= max_part, weakly decreasing.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST(Builders, ClassicalDimensionsAndCatalog) {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}) {
    for (std::size_t r = (t == ClassicalType::D ? 2 : 1); r <= 4; ++r) {
      const ClassicalAlgebra ca = classical(t, r);
      EXPECT_EQ(ca.base.dim(), expected_dim(t, r));
      EXPECT_TRUE(check_jacobi(ca.base).ok) << type_letter(t) << r;
      for (const auto& [name, rep] : ca.rep_catalog) {
        EXPECT_TRUE(check_homomorphism(rep).ok) << type_letter(t) << r << " " << name;
      }
      for (const auto& m : ca.matrices.basis()) {
        EXPECT_EQ(trace(m), 0);
        if (ca.form) EXPECT_TRUE(in_form_algebra(m, ca.form->matrix));
      }
      const std::size_t n = ca.n_defining;
      if (t == ClassicalType::B || t == ClassicalType::D) {
        EXPECT_EQ(ca.rep("sym2_traceless").dim_module(), n * (n + 1) / 2 - 1);
      } else if (t == ClassicalType::C) {
        EXPECT_EQ(ca.rep("wedge2_reduced").dim_module(), n * (n - 1) / 2 - 1);
      }
    }
  }
  EXPECT_EQ(classical(ClassicalType::A, 1).base.dim(), 3u);
  EXPECT_EQ(classical(ClassicalType::C, 2).rep("defining").dim_module(), 4u);
  EXPECT_EQ(index(classical(ClassicalType::B, 2).base), 2u);
  EXPECT_THROW(classical(ClassicalType::D, 1), std::invalid_argument);
  EXPECT_THROW(classical(ClassicalType::A, 13), std::invalid_argument);
  EXPECT_THROW(classical(ClassicalType::A, 1).rep("sym2_traceless"), std::invalid_argument);
}

TEST(Builders, MatrixSpaceCoordinates) {
  const ClassicalAlgebra ca = classical(ClassicalType::C, 2);
  Vector x = to_vector({1, -2, 3, 0, 5, 7, -1, 0, 2, 4});
  EXPECT_EQ(ca.coordinates(ca.matrix(x)), x);
  Matrix not_in = Matrix::identity(4);
  EXPECT_THROW(ca.coordinates(not_in), std::invalid_argument);
  const ClassicalAlgebra a2 = classical(ClassicalType::A, 2);
  Vector y = to_vector({1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_EQ(a2.coordinates(a2.matrix(y)), y);
}

TEST(Builders, Heisenberg) {
  const LieAlgebra h1 = heisenberg(1);
  EXPECT_EQ(h1.dim(), 3u);
  EXPECT_EQ(center(h1).dim(), 1u);
  EXPECT_EQ(index(heisenberg(2)), 1u);
  for (std::size_t n = 1; n <= 3; ++n) {
    const LieAlgebra q = quotient_algebra(heisenberg(n), center(heisenberg(n)));
    EXPECT_TRUE(q.is_abelian());
    EXPECT_EQ(index(q), 2 * n);
  }
  EXPECT_THROW(heisenberg(0), std::invalid_argument);
}

TEST(Builders, Borel) {
  const LieAlgebra b2 = borel(classical(ClassicalType::A, 1));
  EXPECT_EQ(b2.dim(), 2u);
  EXPECT_FALSE(b2.is_abelian());
  EXPECT_EQ(index(borel(classical(ClassicalType::A, 2))), 1u);
  EXPECT_EQ(index(borel(classical(ClassicalType::A, 3))), 1u);
  EXPECT_THROW(borel(classical(ClassicalType::C, 2)), std::invalid_argument);
}

TEST(Builders, Semidirect) {
  const ClassicalAlgebra sl2 = classical(ClassicalType::A, 1);
  const SemidirectData sd = semidirect(sl2.base, sl2.rep("adjoint"));
  EXPECT_EQ(sd.total.dim(), 6u);
  EXPECT_TRUE(check_jacobi(sd.total).ok);
  EXPECT_EQ(sd.total, takiff(sl2.base, 1).total);
  EXPECT_TRUE(is_commutative(sd.embed_module, sd.total));
  EXPECT_TRUE(bracket_span(sd.total, SubspaceBasis::whole(6), sd.embed_module).dim() <= 3);
  EXPECT_EQ(quotient_algebra(sd.total, sd.embed_module), sl2.base);

  const SemidirectData triv = semidirect(sl2.base, sl2.rep("trivial"));
  EXPECT_EQ(center(triv.total), SubspaceBasis::span(4, {unit_vector(4, 3)}));

  const ClassicalAlgebra so3 = classical(ClassicalType::B, 1);
  const SemidirectData s8 = semidirect(so3.base, so3.rep("sym2_traceless"));
  EXPECT_EQ(s8.total.dim(), 8u);
  EXPECT_TRUE(check_jacobi(s8.total).ok);

  std::vector<Matrix> bad = sl2.rep("defining").action();
  bad[0] = Rational(3) * bad[0];
  EXPECT_THROW(semidirect(sl2.base, Representation(sl2.base, bad)), std::invalid_argument);
  EXPECT_THROW(semidirect(sl2.base, adjoint_representation(heisenberg(1))), std::invalid_argument);
}

TEST(Builders, Takiff) {
  const LieAlgebra sl2 = classical(ClassicalType::A, 1).base;
  const TakiffData t1 = takiff(sl2, 1);
  EXPECT_EQ(t1.total.dim(), 6u);
  EXPECT_EQ(index(takiff(sl2, 2).total), 3u);
  EXPECT_EQ(index(takiff(heisenberg(1), 1).total), 2u);
  for (std::size_t n = 1; n <= 3; ++n) {
    const TakiffData tk = takiff(sl2, n);
    EXPECT_EQ(tk.total.dim(), (n + 1) * 3);
    EXPECT_TRUE(check_jacobi(tk.total).ok);
    for (std::size_t l = 0; l <= n; ++l)
      for (std::size_t k = 0; k <= n; ++k) {
        const SubspaceBasis br = bracket_span(tk.total, tk.layer_bases[l], tk.layer_bases[k]);
        if (l + k > n) {
          EXPECT_EQ(br.dim(), 0u);
        } else {
          EXPECT_TRUE(tk.layer_bases[l + k].contains(br));
        }
      }
    EXPECT_EQ(induced_subalgebra(tk.total, tk.layer_bases[0]), sl2);
  }
  EXPECT_THROW(takiff(sl2, 0), std::invalid_argument);
}

TEST(Builders, TakiffizeModule) {
  const ClassicalAlgebra sl2 = classical(ClassicalType::A, 1);
  const TakiffData tk = takiff(sl2.base, 1);
  const Representation w = takiffize_module(sl2.rep("adjoint"), tk);
  EXPECT_TRUE(check_homomorphism(w).ok);
  // The adjoint module of takiff(q,1) after negating the second copy of V.
  Matrix d = Matrix::identity(6);
  for (std::size_t i = 3; i < 6; ++i) d(i, i) = -1;
  const Representation ad = adjoint_representation(tk.total);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(d * w.action(i) * d, ad.action(i));

  const Representation t = takiffize_module(sl2.rep("trivial"), tk);
  EXPECT_EQ(t.dim_module(), 2u);
  for (const auto& m : t.action()) EXPECT_TRUE(m.is_zero());

  const ClassicalAlgebra sp4 = classical(ClassicalType::C, 2);
  const Representation w8 = takiffize_module(sp4.rep("defining"), takiff(sp4.base, 1));
  EXPECT_EQ(w8.dim_module(), 8u);
  EXPECT_TRUE(check_homomorphism(w8).ok);
  EXPECT_THROW(takiffize_module(sl2.rep("adjoint"), takiff(sl2.base, 2)), std::invalid_argument);
}

TEST(Builders, StandardInvolutions) {
  struct Case {
    InvolutionKind kind;
    std::size_t sl_rank;
    std::size_t fixed_dim;
  };
  for (const Case& c : {Case{InvolutionKind::orthogonal, 1, 1}, Case{InvolutionKind::symplectic, 3, 10},
                        Case{InvolutionKind::swap, 1, 3}, Case{InvolutionKind::orthogonal, 2, 3},
                        Case{InvolutionKind::orthogonal, 3, 6}, Case{InvolutionKind::symplectic, 1, 3}}) {
    const Involution inv = standard_involution(c.kind, c.sl_rank);
    const InvolutionReport rep = check_involution(inv);
    EXPECT_TRUE(rep.squares_to_identity);
    EXPECT_TRUE(rep.preserves_bracket);
    const SemidirectData sd = z2_contraction(inv);
    ASSERT_TRUE(sd.origin);
    EXPECT_EQ(sd.origin->g0.dim(), c.fixed_dim);
    EXPECT_EQ(sd.origin->g0.dim() + sd.origin->g1.dim(), inv.algebra.dim());
    EXPECT_TRUE(sd.origin->g0.contains(bracket_span(inv.algebra, sd.origin->g1, sd.origin->g1)));
    EXPECT_TRUE(sd.origin->g1.contains(bracket_span(inv.algebra, sd.origin->g0, sd.origin->g1)));
    EXPECT_TRUE(check_jacobi(sd.total).ok);
  }
  EXPECT_THROW(standard_involution(InvolutionKind::symplectic, 2), std::invalid_argument);
  Involution broken = standard_involution(InvolutionKind::orthogonal, 1);
  broken.matrix = Rational(2) * broken.matrix;
  EXPECT_FALSE(check_involution(broken).ok());
  EXPECT_THROW(z2_contraction(broken), std::invalid_argument);
}

TEST(Builders, Z2Contractions) {
  const LieAlgebra sl2 = classical(ClassicalType::A, 1).base;
  EXPECT_EQ(z2_contraction(swap_involution(sl2)).total, takiff(sl2, 1).total);
  const SemidirectData so3 = z2_contraction(standard_involution(InvolutionKind::orthogonal, 2));
  EXPECT_EQ(so3.source_rep.dim_module(), 5u);
  EXPECT_EQ(index(so3.total), 2u);
  const SemidirectData sp4 = z2_contraction(standard_involution(InvolutionKind::symplectic, 3));
  EXPECT_EQ(sp4.embed_algebra.dim(), 10u);
  EXPECT_EQ(sp4.source_rep.dim_module(), 5u);
  EXPECT_EQ(index(sp4.total), 3u);
}

TEST(Builders, NilpotentExamples) {
  const NilpotentModel a = nilpotent_from_partition(ClassicalType::A, {3});
  EXPECT_EQ(rank(a.matrix), 2u);
  EXPECT_TRUE(power(a.matrix, 3).is_zero());
  EXPECT_EQ(a.algebra.matrix(a.x), a.matrix);

  const NilpotentModel c = nilpotent_from_partition(ClassicalType::C, {2, 2});
  EXPECT_EQ(c.algebra.base.dim(), 10u);
  EXPECT_TRUE(power(c.matrix, 2).is_zero());
  EXPECT_EQ(rank(c.matrix), 2u);
  ASSERT_TRUE(c.algebra.form);
  const Matrix& j = c.algebra.form->matrix;
  EXPECT_EQ(j.transpose(), Rational(-1) * j);
  EXPECT_EQ((j * c.matrix).transpose(), j * c.matrix);

  const NilpotentModel b = nilpotent_from_partition(ClassicalType::B, {5});
  EXPECT_EQ(b.algebra.base.dim(), 10u);
  EXPECT_TRUE(in_form_algebra(b.matrix, b.algebra.form->matrix));
  EXPECT_EQ(jordan_type(b.matrix), (std::vector<int>{5}));

  EXPECT_THROW(nilpotent_from_partition(ClassicalType::C, {3, 1}), std::invalid_argument);
  EXPECT_THROW(nilpotent_from_partition(ClassicalType::B, {2, 1}), std::invalid_argument);
  EXPECT_THROW(nilpotent_from_partition(ClassicalType::B, {2, 2}), std::invalid_argument);
  EXPECT_THROW(nilpotent_from_partition(ClassicalType::D, {3, 1, 1}), std::invalid_argument);
}

TEST(BuildersProperty, NilpotentJordanTypeAllSmallPartitions) {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}) {
    for (int n = 2; n <= 8; ++n) {
      std::vector<std::vector<int>> all;
      std::vector<int> cur;
      partitions(n, n, cur, all);
      for (const auto& p : all) {
        NilpotentModel nm;
        try {
          nm = nilpotent_from_partition(t, p);
        } catch (const std::invalid_argument&) {
          continue;
        }
        EXPECT_TRUE(check_jacobi(nm.algebra.base).ok);
        EXPECT_EQ(nm.algebra.base.dim(), expected_dim(t, nm.algebra.rank));
        if (nm.algebra.form) EXPECT_TRUE(in_form_algebra(nm.matrix, nm.algebra.form->matrix));
        Matrix pk = Matrix::identity(nm.matrix.rows());
        for (int k = 1; k <= p.front(); ++k) {
          pk = pk * nm.matrix;
          std::size_t expect = 0;
          for (int part : p) expect += static_cast<std::size_t>(std::max(part - k, 0));
          EXPECT_EQ(rank(pk), expect);
        }
      }
    }
  }
}

TEST(Builders, Descriptors) {
  EXPECT_EQ(parse_descriptor("A3").algebra.dim(), 15u);
  EXPECT_EQ(parse_descriptor("B2").algebra.dim(), 10u);
  EXPECT_EQ(parse_descriptor("C4").algebra.dim(), 36u);
  EXPECT_EQ(parse_descriptor("D5").algebra.dim(), 45u);
  EXPECT_EQ(parse_descriptor("heis2").algebra.dim(), 5u);
  EXPECT_EQ(parse_descriptor("borel:A2").algebra.dim(), 5u);
  EXPECT_EQ(parse_descriptor("takiff:A1:2").algebra.dim(), 9u);
  EXPECT_EQ(parse_descriptor("z2:A3:so").algebra.dim(), 15u);
  EXPECT_EQ(parse_descriptor("z2:A3:sp").algebra.dim(), 15u);
  EXPECT_EQ(parse_descriptor("z2:A1:swap").algebra.dim(), 6u);
  EXPECT_EQ(parse_descriptor("sd:A1:adjoint").algebra.dim(), 6u);
  EXPECT_EQ(parse_descriptor("sd:C2:wedge2_reduced").algebra.dim(), 15u);
  EXPECT_EQ(parse_descriptor("sd:heis1:coadjoint").algebra.dim(), 6u);
  for (const char* bad : {"E6", "A0", "D1", "heis0", "borel:C2", "z2:C2:so", "z2:A2:sp", "sd:A1:bogus", "x:y", "",
                          "takiff:A1", "A99999"}) {
    EXPECT_THROW(parse_descriptor(bad), std::invalid_argument) << bad;
  }
}

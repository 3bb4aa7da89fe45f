// Acceptance run: one [PASS]/[FAIL] line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock budgets below.
//
//   takiff_acceptance            run everything
//   takiff_acceptance AC2 AC7    run a subset

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "takiff/builders.hpp"
#include "takiff/invariants.hpp"
#include "takiff/orbits.hpp"
#include "takiff/stabilizers.hpp"

using namespace takiff_lab;

namespace {

constexpr double budget_ac1 = 60;
constexpr double budget_ac2 = 120;
constexpr double budget_ac3 = 60;
constexpr double budget_ac4 = 300;
constexpr double budget_ac5 = 60;
constexpr double budget_ac6 = 120;
constexpr double budget_ac7 = 180;
constexpr double budget_ac8 = 120;
constexpr double budget_ac9 = 120;
constexpr double budget_ac10 = 120;

constexpr std::size_t trials = 8;
constexpr std::uint64_t seed = 0;

// Collects failures; `checked` counts the individual comparisons.
struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  template <class F>
  void guarded(const std::string& what, F f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++checked;
      failures.push_back(what + " threw: " + e.what());
    }
  }
};

std::string name_of(ClassicalType t, std::size_t r) { return std::string(1, type_letter(t)) + std::to_string(r); }

// sl_2..sl_6, so_3..so_10, sp_4..sp_8 as (type, rank).
std::vector<std::pair<ClassicalType, std::size_t>> ac1_atoms() {
  std::vector<std::pair<ClassicalType, std::size_t>> out;
  for (std::size_t r = 1; r <= 5; ++r) out.emplace_back(ClassicalType::A, r);
  for (std::size_t r = 1; r <= 4; ++r) out.emplace_back(ClassicalType::B, r);
  for (std::size_t r = 2; r <= 5; ++r) out.emplace_back(ClassicalType::D, r);
  for (std::size_t r = 2; r <= 4; ++r) out.emplace_back(ClassicalType::C, r);
  return out;
}

void structural(Tally& t) {
  auto jacobi = [&](const LieAlgebra& alg, const std::string& what) {
    t.guarded(what, [&] { t.expect(check_jacobi(alg).ok, what); });
  };
  auto over = [&](const LieAlgebra& q, const std::vector<Representation>& reps, const std::string& what) {
    jacobi(q, what);
    for (const auto& rep : reps)
      t.guarded("sd " + what + " " + rep.name(), [&] { jacobi(semidirect(q, rep).total, "sd " + what + " " + rep.name()); });
    for (std::size_t n = 1; n <= 2; ++n) jacobi(takiff(q, n).total, "takiff " + what + " " + std::to_string(n));
  };

  for (auto [type, rank] : ac1_atoms()) {
    const ClassicalAlgebra ca = classical(type, rank);
    std::vector<Representation> reps;
    for (const auto& [name, rep] : ca.rep_catalog) reps.push_back(rep);
    over(ca.base, reps, name_of(type, rank));
  }
  {
    // Regular semisimple but with a zero eigenvalue: V^x picks up e_2.
    const AlgebraBundle b = parse_descriptor("sd:A2:defining");
    Matrix m(3, 3);
    m(0, 0) = -2;
    m(2, 2) = 2;
    t.expect(!sgp_transfer_check(*b.semidirect, b.classical->coordinates(m), seed).verdict,
             "sd:A2:defining passed at diag(-2, 0, 2)");
  }

  for (std::size_t n = 1; n <= 3; ++n) {
    const LieAlgebra h = heisenberg(n);
    const Representation ad = adjoint_representation(h);
    over(h, {ad, dual_representation(ad), trivial_representation(h, 2)}, "heis" + std::to_string(n));
  }
  for (std::size_t r = 1; r <= 4; ++r) {
    const LieAlgebra b = borel(classical(ClassicalType::A, r));
    const Representation ad = adjoint_representation(b);
    over(b, {ad, dual_representation(ad)}, "borel A" + std::to_string(r));
  }
  for (std::size_t r = 1; r <= 5; ++r) {
    std::vector<std::pair<InvolutionKind, std::string>> kinds = {{InvolutionKind::orthogonal, "so"},
                                                                 {InvolutionKind::swap, "swap"}};
    if (r % 2 == 1) kinds.emplace_back(InvolutionKind::symplectic, "sp");
    for (const auto& [k, kind_name] : kinds) {
      const std::string what = "z2 A" + std::to_string(r) + " " + kind_name;
      t.guarded(what, [&] {
        const Involution inv = standard_involution(k, r);
        t.expect(check_involution(inv).ok(), what + " involution");
        jacobi(z2_contraction(inv).total, what);
      });
    }
  }
}

void index_identities(Tally& t) {
  auto expect_index = [&](const LieAlgebra& alg, std::size_t want, const std::string& what) {
    t.guarded(what, [&] {
      const std::size_t got = index(alg, trials, seed);
      t.expect(got == want, what + ": index " + std::to_string(got) + ", expected " + std::to_string(want));
    });
  };
  for (ClassicalType type : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    for (std::size_t r = type == ClassicalType::D ? 2 : 1; r <= 5; ++r)
      expect_index(classical(type, r).base, r, name_of(type, r));

  const std::vector<std::pair<std::string, LieAlgebra>> small = {
      {"sl2", classical(ClassicalType::A, 1).base}, {"sl3", classical(ClassicalType::A, 2).base}, {"heis1", heisenberg(1)}};
  for (const auto& [name, q] : small) {
    const std::size_t base = index(q, trials, seed);
    for (std::size_t n = 1; n <= 3; ++n)
      expect_index(takiff(q, n).total, (n + 1) * base, "takiff " + name + " " + std::to_string(n));
  }
  for (auto [desc, rk] : {std::pair{"z2:A2:so", 2u}, std::pair{"z2:A3:sp", 3u}, std::pair{"z2:A3:so", 3u},
                          std::pair{"z2:A1:swap", 2u}})
    expect_index(parse_descriptor(desc).algebra, rk, desc);
  for (std::size_t n = 1; n <= 5; ++n) expect_index(heisenberg(n), 1, "heis" + std::to_string(n));
  for (std::size_t n = 2; n <= 5; ++n)
    expect_index(borel(classical(ClassicalType::A, n - 1)), (n - 1) / 2, "borel sl" + std::to_string(n));
}

void swap_is_takiff(Tally& t) {
  for (std::size_t r : {1u, 2u}) {
    const LieAlgebra g = classical(ClassicalType::A, r).base;
    const SemidirectData z = z2_contraction(swap_involution(g));
    const TakiffData tk = takiff(g, 1);
    t.expect(z.total.dim() == tk.total.dim(), "dims for sl" + std::to_string(r + 1));
    t.expect(z.total.entries().size() == tk.total.entries().size(), "entry counts for sl" + std::to_string(r + 1));
    bool same = true;
    const auto a = z.total.entries(), b = tk.total.entries();
    for (std::size_t i = 0; same && i < std::min(a.size(), b.size()); ++i)
      same = a[i].i == b[i].i && a[i].j == b[i].j && a[i].k == b[i].k && a[i].value == b[i].value;
    t.expect(same, "structure constants for sl" + std::to_string(r + 1));
  }
}

void takiffized_invariants(Tally& t) {
  for (auto [type, rank] : {std::pair{ClassicalType::A, 1u}, std::pair{ClassicalType::A, 2u}, std::pair{ClassicalType::C, 2u}}) {
    const ClassicalAlgebra ca = classical(type, rank);
    const std::vector<Polynomial> fs = casimir_generators(ca);
    for (std::size_t n = 1; n <= 2; ++n) {
      const std::string what = name_of(type, rank) + " level " + std::to_string(n);
      const Representation ad = adjoint_representation(takiff(ca.base, n).total);
      std::vector<Polynomial> all;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const EpsilonExpansion e = takiffize_invariant(fs[i], n);
        for (std::size_t k = 0; k < e.coefficients.size(); ++k) {
          t.expect(is_invariant(ad, e.coefficients[k]),
                   what + " casimir " + std::to_string(i) + " eps^" + std::to_string(k) + " not invariant");
          all.push_back(e.coefficients[k]);
        }
      }
      const IndependenceReport ind = certify_independence(all, trials, seed);
      t.expect(ind.rank == (n + 1) * rank,
               what + ": jacobian rank " + std::to_string(ind.rank) + ", expected " + std::to_string((n + 1) * rank));
    }
  }
}

// x -> x read as a covector through the trace form: component k = tr(X B_k).
PolyMap trace_form_identity(const ClassicalAlgebra& ca) {
  const std::size_t d = ca.base.dim();
  const auto& basis = ca.matrices.basis();
  PolyMap f{d, d, {}};
  for (std::size_t k = 0; k < d; ++k) {
    Vector coeffs(d);
    for (std::size_t i = 0; i < d; ++i) {
      Rational tr = 0;
      for (std::size_t a = 0; a < ca.n_defining; ++a)
        for (std::size_t b = 0; b < ca.n_defining; ++b) tr += basis[i](a, b) * basis[k](b, a);
      coeffs[i] = tr;
    }
    f.components.push_back(Polynomial::linear(d, coeffs));
  }
  return f;
}

void hat_lifts(Tally& t) {
  for (const char* desc : {"sd:A1:adjoint", "sd:A2:adjoint"}) {
    const AlgebraBundle b = parse_descriptor(desc);
    const Polynomial hat = hat_covariant(trace_form_identity(*b.classical), *b.semidirect);
    t.expect(hat.total_degree() == 2, std::string(desc) + " degree");
    t.expect(is_invariant(adjoint_representation(b.algebra), hat), std::string(desc) + " not invariant");
  }
  const AlgebraBundle b = parse_descriptor("sd:C2:wedge2_reduced");
  const CovariantFamily fam = sp_covariants(*b.classical);
  t.expect(fam.to_dual.size() == 1, "sp4 covariant count");
  const Polynomial hat = hat_covariant(fam.to_dual.at(0), *b.semidirect);
  t.expect(hat.total_degree() == 3, "sp4 hat degree");
  t.expect(is_invariant(adjoint_representation(b.algebra), hat), "sp4 x^2 J hat not invariant");
}

void equivariance(Tally& t) {
  for (auto [type, rank] : {std::pair{ClassicalType::C, 2u}, std::pair{ClassicalType::C, 3u}, std::pair{ClassicalType::B, 2u},
                            std::pair{ClassicalType::B, 3u}, std::pair{ClassicalType::D, 4u}}) {
    const ClassicalAlgebra ca = classical(type, rank);
    const bool sp = type == ClassicalType::C;
    const CovariantFamily fam = sp ? sp_covariants(ca) : so_covariants(ca);
    const Representation ad = ca.rep("adjoint");
    const Representation mod = ca.rep(sp ? "wedge2_reduced" : "sym2_traceless");
    const Representation dual = dual_representation(mod);
    const std::size_t expected = type == ClassicalType::B ? rank : rank - 1;
    t.expect(fam.degrees.size() == expected, name_of(type, rank) + " covariant count");
    for (std::size_t i = 0; i < fam.degrees.size(); ++i) {
      const std::string what = name_of(type, rank) + " x^" + std::to_string(fam.degrees[i]);
      t.expect(equivariance_check(fam.to_module[i], ad, mod), what + " into the module");
      t.expect(equivariance_check(fam.to_dual[i], ad, dual), what + " into the dual");
    }
  }
}

void oracle(Tally& t) {
  for (ClassicalType type : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}) {
    for (std::size_t r = type == ClassicalType::D ? 2 : 1; defining_size(type, r) <= 8; ++r) {
      for (const auto& p : enumerate_partitions(type, defining_size(type, r))) {
        const std::string what = std::string(1, type_letter(type)) + " (" + to_string(p) + ")";
        t.guarded(what, [&] {
          const OrbitRecord f = formula_record(p), m = matrix_oracle(p);
          t.expect(f.centralizer_dim == m.centralizer_dim, what + " centralizer_dim");
          t.expect(f.stratum_index == m.stratum_index, what + " stratum_index");
          t.expect(f.rank_dpi == m.rank_dpi, what + " rank_dpi");
        });
      }
    }
  }
}

void sweeps(Tally& t) {
  for (ClassicalType type : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}) {
    const SweepReport r = sweep(Inequality::bril_takiff, type, 10);
    const std::string what = std::string("bril-takiff ") + type_letter(type);
    t.expect(r.violations.empty(), what + ": " + std::to_string(r.violations.size()) + " violations");
    t.expect(r.codim_form_agrees, what + " codimension form");
    t.expect(!r.entries.empty(), what + " empty sweep");
    for (const auto& e : r.entries) {
      const auto& parts = e.record.partition.parts;
      if (type == ClassicalType::A)
        t.expect((e.value == 0) == (parts.size() <= 2), what + " equality set at (" + to_string(e.record.partition) + ")");
      if (type == ClassicalType::C)
        t.expect((e.value == 0) == (dual(parts).front() <= 2),
                 what + " equality set at (" + to_string(e.record.partition) + ")");
    }
  }
  for (auto [type, rank] : {std::pair{ClassicalType::C, 10u}, std::pair{ClassicalType::B, 9u}, std::pair{ClassicalType::D, 10u}}) {
    const SweepReport r = sweep(Inequality::brilliant, type, rank);
    t.expect(r.ok() && !r.entries.empty(), std::string("brilliant ") + type_letter(type));
  }
  for (ClassicalType type : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D})
    t.expect(not_vain_bounds(type, 8, 2).violations.empty(), std::string("not-vain n=2 ") + type_letter(type));
  const SweepReport three = not_vain_bounds(ClassicalType::A, 3, 3);
  const bool subregular = std::any_of(three.violations.begin(), three.violations.end(), [](const SweepEntry& e) {
    return e.record.partition.parts == std::vector<int>{3, 1};
  });
  t.expect(subregular, "not-vain n=3: no violation at the subregular orbit of sl4");
}

// Diagonal with distinct eigenvalues. Type A: 1, ..., N-1 and -N(N-1)/2, so no
// eigenvalue is zero and the defining module has no fixed vector. Otherwise
// 1-N, 3-N, ..., N-1, which lies in the algebra for the split forms.
Vector regular_semisimple(const ClassicalAlgebra& ca) {
  const long n = static_cast<long>(ca.n_defining);
  Matrix m(n, n);
  for (long i = 0; i < n; ++i) {
    if (ca.type == ClassicalType::A) m(i, i) = i + 1 < n ? Rational(i + 1) : Rational(-n * (n - 1) / 2);
    else m(i, i) = Rational(2 * i - n + 1);
  }
  return ca.coordinates(m);
}

void genericity(Tally& t) {
  auto side_conditions = [&](const GenericityReport& r, const std::string& what) {
    if (!r.verdict) return;
    t.expect(r.checks.at("self_normalizing"), what + " centralizer not self-normalizing");
    t.expect(r.checks.at("coadjoint_split"), what + " coadjoint decomposition");
  };
  for (std::size_t r = 1; r <= 3; ++r) {
    const ClassicalAlgebra ca = classical(ClassicalType::A, r);
    const GenericityReport rep = adjoint_generic_check(ca.base, regular_semisimple(ca));
    t.expect(rep.verdict, "sl" + std::to_string(r + 1) + " regular semisimple point");
    t.expect(rep.stabilizer.dim() == r, "sl" + std::to_string(r + 1) + " centralizer is a Cartan");
    side_conditions(rep, "sl" + std::to_string(r + 1));
  }
  t.expect(!sampled_adjoint_check(heisenberg(1), trials, seed).verdict, "heis1 passed the adjoint check");

  for (const char* desc : {"sd:A1:adjoint", "sd:A2:adjoint", "sd:A3:adjoint", "sd:A1:defining", "sd:A2:defining",
                           "sd:A3:defining", "sd:B1:sym2_traceless", "sd:B2:sym2_traceless", "sd:D3:sym2_traceless"}) {
    const AlgebraBundle b = parse_descriptor(desc);
    const Vector x = regular_semisimple(*b.classical);
    const GenericityReport r = sgp_transfer_check(*b.semidirect, x, seed);
    t.expect(r.verdict, std::string(desc) + " transfer");
    t.expect(r.checks.at("lift_generic"), std::string(desc) + " lifted point");
    Vector lifted = x;
    lifted.resize(b.algebra.dim());
    side_conditions(adjoint_generic_check(b.algebra, lifted), desc);
  }

  {
    // Regular semisimple but with a zero eigenvalue: V^x picks up e_2.
    const AlgebraBundle b = parse_descriptor("sd:A2:defining");
    Matrix m(3, 3);
    m(0, 0) = -2;
    m(2, 2) = 2;
    t.expect(!sgp_transfer_check(*b.semidirect, b.classical->coordinates(m), seed).verdict,
             "sd:A2:defining passed at diag(-2, 0, 2)");
  }

  for (std::size_t n = 1; n <= 3; ++n) {
    const LieAlgebra h = heisenberg(n);
    const GenericityReport r = sampled_coadjoint_check(h, trials, seed);
    t.expect(r.verdict && r.stabilizer == center(h), "heis" + std::to_string(n) + " generic stabilizer is the center");
  }
}

void contraction_agreement(Tally& t) {
  for (const char* desc : {"z2:A1:so", "z2:A2:so", "z2:A3:so", "z2:A4:so", "z2:A1:sp", "z2:A3:sp", "z2:A1:swap",
                           "z2:A2:swap"}) {
    t.guarded(desc, [&] {
      const AlgebraBundle b = parse_descriptor(desc);
      const ContractionDims c = contraction_dims(*b.semidirect, b.semidirect->origin->ambient, trials, seed);
      std::ostringstream s;
      s << desc << ": torus " << c.via_torus << ", centralizer " << c.via_centralizer << ", index "
        << c.index_contraction << ", ambient " << c.index_reference;
      t.expect(c.agree(), s.str());
    });
  }
}

struct Criterion {
  const char* id;
  const char* title;
  double budget;
  std::function<void(Tally&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"AC1", "structural validity", budget_ac1, structural},
      {"AC2", "index identities", budget_ac2, index_identities},
      {"AC3", "swap contraction equals takiff level 1", budget_ac3, swap_is_takiff},
      {"AC4", "takiffized Casimirs", budget_ac4, takiffized_invariants},
      {"AC5", "hat lifts are invariant", budget_ac5, hat_lifts},
      {"AC6", "covariant equivariance", budget_ac6, equivariance},
      {"AC7", "partition formulas against the matrix oracle", budget_ac7, oracle},
      {"AC8", "inequality sweeps", budget_ac8, sweeps},
      {"AC9", "genericity suite", budget_ac9, genericity},
      {"AC10", "contraction dimensions", budget_ac10, contraction_agreement},
  };
  std::set<std::string> wanted(argv + 1, argv + argc);
  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    t.guarded(c.id, [&] { c.body(t); });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget;
    const bool pass = t.failures.empty() && in_time && t.checked > 0;
    std::printf("[%s] %s %s: %zu checks, %.1f s (budget %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title, t.checked,
                secs, c.budget);
    for (const auto& f : t.failures) std::printf("       %s\n", f.c_str());
    if (!in_time) std::printf("       over the time budget\n");
    std::fflush(stdout);
    failed += !pass;
  }
  return failed == 0 ? 0 : 1;
}

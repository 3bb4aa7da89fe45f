#include "takiff/invariants.hpp"

#include <stdexcept>
#include <unordered_map>

#include "takiff/sampling.hpp"

namespace takiff_lab {

namespace {

// tr(AB) without forming the product.
Polynomial trace_of_product(const PolyMatrix& a, const PolyMatrix& b) {
  Polynomial t(a.num_vars());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (!a(i, j).is_zero() && !b(j, i).is_zero()) t += a(i, j) * b(j, i);
    }
  return t;
}

PolyMatrix constant_times(const Matrix& g, const PolyMatrix& x) {
  PolyMatrix r(x.n(), x.num_vars());
  for (std::size_t i = 0; i < x.n(); ++i)
    for (std::size_t l = 0; l < x.n(); ++l) {
      if (sgn(g(i, l)) == 0) continue;
      for (std::size_t j = 0; j < x.n(); ++j) {
        if (!x(l, j).is_zero()) r(i, j) += g(i, l) * x(l, j);
      }
    }
  return r;
}

// tr(Y^i) for i = 1..count, where only the last power skips the full product.
std::vector<Polynomial> power_traces(const PolyMatrix& y, std::size_t count) {
  std::vector<Polynomial> out;
  if (count == 0) return out;
  out.push_back(y.trace());
  PolyMatrix p = y;
  for (std::size_t i = 2; i <= count; ++i) {
    if (i == count) {
      out.push_back(trace_of_product(p, y));
    } else {
      p = p * y;
      out.push_back(p.trace());
    }
  }
  return out;
}

struct GeneratorSpec {
  ClassicalType type;
  std::size_t rank;
};

std::size_t covariant_count(ClassicalType type, std::size_t rank) {
  switch (type) {
    case ClassicalType::B: return rank;
    case ClassicalType::C:
    case ClassicalType::D: return rank - 1;
    case ClassicalType::A: break;
  }
  throw std::invalid_argument("covariants x^{2i} are defined for types B, C, D only");
}

CovariantFamily form_covariants(const ClassicalAlgebra& ca, std::size_t count) {
  const std::size_t d = ca.base.dim();
  const std::size_t n = ca.n_defining;
  const MatrixSpace& mod = ca.form_module;
  const auto functionals = mod.coordinate_functionals();
  const PolyMatrix x = generic_matrix(ca.matrices, d);
  const PolyMatrix y = x * x;
  CovariantFamily fam;
  PolyMatrix p = y;
  for (std::size_t i = 1; i <= count; ++i) {
    if (i > 1) p = p * y;
    const Polynomial tr = p.trace();
    PolyMap to_mod{d, mod.dim(), {}};
    for (const auto& fk : functionals) {
      Polynomial c(d);
      Rational diag = 0;
      for (const auto& [pos, w] : fk) {
        c += w * p(pos / n, pos % n);
        if (pos / n == pos % n) diag += w;
      }
      // Coordinates of the traceless part p - (tr p / n) I.
      c = c - (diag / static_cast<long>(n)) * tr;
      to_mod.components.push_back(std::move(c));
    }
    PolyMap to_dual{d, mod.dim(), {}};
    for (const auto& ck : mod.basis()) {
      Polynomial c(d);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (sgn(ck(b, a)) != 0 && !p(a, b).is_zero()) c += ck(b, a) * p(a, b);
        }
      to_dual.components.push_back(std::move(c));
    }
    fam.to_module.push_back(std::move(to_mod));
    fam.to_dual.push_back(std::move(to_dual));
    fam.degrees.push_back(static_cast<int>(2 * i));
  }
  return fam;
}

}  // namespace

Polynomial lie_derivative(const Representation& rep, const Polynomial& f, std::size_t i) {
  const std::size_t m = rep.dim_module();
  if (f.num_vars() != m) throw std::invalid_argument("lie_derivative: polynomial lives on a different module");
  const Matrix& r = rep.action(i);
  // rows[k] = nonzero (l, rho_kl)
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) {
      if (sgn(r(k, l)) != 0) rows[k].emplace_back(l, r(k, l));
    }
  std::vector<Polynomial::Term> terms;
  for (const auto& [mono, c] : f.terms()) {
    for (std::size_t k = 0; k < m; ++k) {
      if (mono[k] == 0 || rows[k].empty()) continue;
      const Rational base = c * mono[k];
      for (const auto& [l, v] : rows[k]) {
        Monomial nm = mono;
        --nm[k];
        ++nm[l];
        terms.emplace_back(std::move(nm), base * v);
      }
    }
  }
  return Polynomial(m, std::move(terms));
}

bool is_invariant(const Representation& rep, const Polynomial& f) {
  for (std::size_t i = 0; i < rep.algebra().dim(); ++i) {
    if (!lie_derivative(rep, f, i).is_zero()) return false;
  }
  return true;
}

PolyMatrix generic_matrix(const std::vector<Matrix>& basis, std::size_t num_vars, std::size_t offset) {
  if (basis.empty()) throw std::invalid_argument("generic_matrix: empty basis");
  if (offset + basis.size() > num_vars) throw std::invalid_argument("generic_matrix: not enough variables");
  const std::size_t n = basis.front().rows();
  PolyMatrix x(n, num_vars);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Vector coeffs(basis.size());
      bool any = false;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        coeffs[k] = basis[k](r, c);
        any = any || sgn(coeffs[k]) != 0;
      }
      if (any) x(r, c) = Polynomial::linear(num_vars, coeffs, offset);
    }
  return x;
}

PolyMatrix generic_matrix(const MatrixSpace& space, std::size_t num_vars, std::size_t offset) {
  return generic_matrix(space.basis(), num_vars, offset);
}

std::vector<Polynomial> casimirs_of_matrix(ClassicalType type, std::size_t rank, const PolyMatrix& x,
                                           const Matrix* form) {
  std::vector<Polynomial> out;
  const std::size_t nv = x.num_vars();
  if (type == ClassicalType::A) {
    const std::size_t n = rank + 1;
    const PolyMatrix& y = x;
    const std::vector<Polynomial> p = power_traces(y, n);
    // Newton: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
    std::vector<Polynomial> e{Polynomial::constant(nv, 1)};
    for (std::size_t k = 1; k <= n; ++k) {
      Polynomial s(nv);
      for (std::size_t i = 1; i <= k; ++i) {
        const Polynomial t = e[k - i] * p[i - 1];
        s = i % 2 == 1 ? s + t : s - t;
      }
      e.push_back(ratio(1, static_cast<long>(k)) * s);
    }
    // Coefficient of t^{n-k} in det(t - X) is (-1)^k e_k.
    for (std::size_t k = 2; k <= n; ++k) out.push_back(k % 2 == 0 ? e[k] : -e[k]);
    return out;
  }
  const std::size_t count = type == ClassicalType::D ? rank - 1 : rank;
  const PolyMatrix y = x * x;
  out = power_traces(y, count);
  if (type == ClassicalType::D) {
    if (form == nullptr) throw std::invalid_argument("casimirs: type D needs the form for the Pfaffian");
    out.push_back(pfaffian(constant_times(*form, x)));
  }
  return out;
}

std::vector<Polynomial> casimir_generators(const ClassicalAlgebra& ca) {
  const PolyMatrix x = generic_matrix(ca.matrices, ca.base.dim());
  return casimirs_of_matrix(ca.type, ca.rank, x, ca.form ? &ca.form->matrix : nullptr);
}

std::vector<std::string> casimir_names(ClassicalType type, std::size_t rank) {
  std::vector<std::string> names;
  if (type == ClassicalType::A) {
    for (std::size_t k = 2; k <= rank + 1; ++k) names.push_back("c" + std::to_string(k));
    return names;
  }
  const std::size_t count = type == ClassicalType::D ? rank - 1 : rank;
  for (std::size_t i = 1; i <= count; ++i) names.push_back("tr(x^" + std::to_string(2 * i) + ")");
  if (type == ClassicalType::D) names.push_back("pf(Gx)");
  return names;
}

PolyMap differential(const Polynomial& f) {
  PolyMap m{f.num_vars(), f.num_vars(), {}};
  for (std::size_t k = 0; k < f.num_vars(); ++k) m.components.push_back(f.derivative(k));
  return m;
}

Polynomial hat_covariant(const PolyMap& f, const SemidirectData& sd) {
  const std::size_t d = sd.embed_algebra.dim();
  const std::size_t m = sd.source_rep.dim_module();
  if (f.domain_dim != d || f.codomain_dim != m || f.components.size() != m) {
    throw std::invalid_argument("hat_covariant: map does not go from the algebra to the dual module");
  }
  const std::size_t total = d + m;
  Polynomial out(total);
  for (std::size_t k = 0; k < m; ++k) {
    if (f.components[k].num_vars() != d) throw std::invalid_argument("hat_covariant: component has wrong variable count");
    if (f.components[k].is_zero()) continue;
    out += f.components[k].embed(total, 0) * Polynomial::variable(total, d + k);
  }
  return out;
}

CovariantFamily sp_covariants(const ClassicalAlgebra& ca) {
  if (ca.type != ClassicalType::C) throw std::invalid_argument("sp_covariants: needs a type C algebra");
  if (ca.rank < 2) throw std::invalid_argument("sp_covariants: needs sp_{2n} with n >= 2");
  return form_covariants(ca, covariant_count(ca.type, ca.rank));
}

CovariantFamily so_covariants(const ClassicalAlgebra& ca) {
  if (ca.type != ClassicalType::B && ca.type != ClassicalType::D) {
    throw std::invalid_argument("so_covariants: needs a type B or D algebra");
  }
  return form_covariants(ca, covariant_count(ca.type, ca.rank));
}

bool equivariance_check(const PolyMap& f, const Representation& rep_in, const Representation& rep_out) {
  if (f.domain_dim != rep_in.dim_module() || f.codomain_dim != rep_out.dim_module() ||
      f.components.size() != f.codomain_dim || !(rep_in.algebra() == rep_out.algebra())) {
    throw std::invalid_argument("equivariance_check: dimension mismatch");
  }
  for (std::size_t i = 0; i < rep_in.algebra().dim(); ++i) {
    const Matrix& r = rep_out.action(i);
    for (std::size_t k = 0; k < f.codomain_dim; ++k) {
      Polynomial rhs(f.domain_dim);
      for (std::size_t m = 0; m < f.codomain_dim; ++m) {
        if (sgn(r(k, m)) != 0) rhs += r(k, m) * f.components[m];
      }
      if (!(lie_derivative(rep_in, f.components[k], i) == rhs)) return false;
    }
  }
  return true;
}

EpsilonExpansion takiffize_invariant(const Polynomial& f, std::size_t n) {
  const std::size_t d = f.num_vars();
  const std::size_t total = (n + 1) * d;
  std::vector<unsigned> weights(total);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i < d; ++i) weights[j * d + i] = static_cast<unsigned>(j);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial s(total);
    for (std::size_t j = 0; j <= n; ++j) s += Polynomial::variable(total, j * d + i);
    images.push_back(std::move(s));
  }
  const Polynomial expanded = substitute(f, images, weights, static_cast<unsigned>(n));
  EpsilonExpansion e{n, d, {}};
  for (std::size_t j = 0; j <= n; ++j) e.coefficients.push_back(expanded.weighted_part(weights, static_cast<unsigned>(j)));
  return e;
}

namespace {

std::vector<std::vector<Polynomial>> gradients(const std::vector<Polynomial>& fs) {
  std::vector<std::vector<Polynomial>> g;
  for (const auto& f : fs) g.push_back(differential(f).components);
  return g;
}

std::size_t rank_at(const std::vector<std::vector<Polynomial>>& grads, std::size_t nv, const Vector& point) {
  Matrix j(grads.size(), nv);
  for (std::size_t a = 0; a < grads.size(); ++a)
    for (std::size_t b = 0; b < nv; ++b) {
      if (!grads[a][b].is_zero()) j(a, b) = grads[a][b].evaluate(point);
    }
  return rank(j);
}

std::size_t common_num_vars(const std::vector<Polynomial>& fs) {
  const std::size_t nv = fs.front().num_vars();
  for (const auto& f : fs) {
    if (f.num_vars() != nv) throw std::invalid_argument("independence: polynomials have different variable counts");
  }
  return nv;
}

}  // namespace

std::size_t jacobian_rank(const std::vector<Polynomial>& fs, const Vector& point) {
  if (fs.empty()) return 0;
  return rank_at(gradients(fs), common_num_vars(fs), point);
}

std::size_t independence_rank(const std::vector<Polynomial>& fs, const std::vector<Vector>& points) {
  if (fs.empty()) return 0;
  const std::size_t nv = common_num_vars(fs);
  const auto grads = gradients(fs);
  std::size_t best = 0;
  for (const auto& p : points) {
    best = std::max(best, rank_at(grads, nv, p));
    if (best == fs.size()) break;
  }
  return best;
}

IndependenceReport certify_independence(const std::vector<Polynomial>& fs, std::size_t trials, std::uint64_t seed) {
  IndependenceReport rep;
  rep.count = fs.size();
  if (fs.empty()) {
    rep.status = IndependenceStatus::independent;
    return rep;
  }
  const std::size_t nv = common_num_vars(fs);
  const auto grads = gradients(fs);
  Sampler sampler(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector p = sampler.vector(nv, Sampler::height_for_trial(t));
    rep.rank = std::max(rep.rank, rank_at(grads, nv, p));
    rep.points_used = t + 1;
    if (rep.rank == fs.size()) break;
  }
  rep.status = rep.rank == fs.size() ? IndependenceStatus::independent : IndependenceStatus::inconclusive;
  return rep;
}

GeneratorSystem generator_system(const AlgebraBundle& b) {
  GeneratorSystem sys;
  auto add_casimirs_embedded = [&](const ClassicalAlgebra& ca, std::size_t total) {
    const auto fs = casimir_generators(ca);
    const auto names = casimir_names(ca.type, ca.rank);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      sys.generators.push_back(fs[i].embed(total, 0));
      sys.names.push_back(names[i]);
    }
    return fs;
  };
  auto add_takiffized = [&](const ClassicalAlgebra& ca, std::size_t level) {
    const auto fs = casimir_generators(ca);
    const auto names = casimir_names(ca.type, ca.rank);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const EpsilonExpansion e = takiffize_invariant(fs[i], level);
      for (std::size_t j = 0; j <= level; ++j) {
        sys.generators.push_back(e.coefficients[j]);
        sys.names.push_back(names[i] + "[" + std::to_string(j) + "]");
      }
    }
  };

  if (b.involution && b.semidirect && b.classical) {
    const Involution& inv = *b.involution;
    if (inv.name == "swap") {
      // The swap contraction has the structure constants of takiff(g, 1).
      add_takiffized(*b.classical, 1);
      sys.construction = "takiffized basic invariants (swap contraction = takiff(g,1))";
      return sys;
    }
    const ClassicalAlgebra& model = *inv.matrix_model;
    const ContractionOrigin& origin = *b.semidirect->origin;
    const std::size_t n = model.n_defining;
    const std::size_t d0 = origin.g0.dim();
    const std::size_t total = b.algebra.dim();
    std::vector<Matrix> m0, m1;
    for (const auto& v : origin.g0.vectors()) m0.push_back(model.matrix(v));
    for (const auto& v : origin.g1.vectors()) m1.push_back(model.matrix(v));
    const PolyMatrix x0 = generic_matrix(m0, total, 0);
    ClassicalType t;
    std::size_t r;
    Matrix g;
    if (inv.name == "sp") {
      t = ClassicalType::C;
      r = n / 2;
      g = split_skew_form(n);
    } else {
      t = n % 2 == 1 ? ClassicalType::B : ClassicalType::D;
      r = n / 2;
      g = split_symmetric_form(n);
    }
    const auto fs = casimirs_of_matrix(t, r, x0, &g);
    const auto names = casimir_names(t, r);
    sys.generators = fs;
    sys.names = names;
    const std::size_t count = covariant_count(t, r);
    if (count > 0) {
      const PolyMatrix v = generic_matrix(m1, total, d0);
      const PolyMatrix y = x0 * x0;
      PolyMatrix p = y;
      for (std::size_t i = 1; i <= count; ++i) {
        if (i > 1) p = p * y;
        sys.generators.push_back(trace_of_product(p, v));
        sys.names.push_back("hat(x^" + std::to_string(2 * i) + ")");
      }
    }
    sys.construction = "basic invariants of g0 and tr(x^{2i} v) in the ambient matrix model";
    return sys;
  }
  if (b.takiff && b.classical) {
    add_takiffized(*b.classical, b.takiff->level);
    sys.construction = "epsilon-expansion coefficients of the basic invariants";
    return sys;
  }
  if (b.semidirect && b.classical) {
    const SemidirectData& sd = *b.semidirect;
    const ClassicalAlgebra& ca = *b.classical;
    const std::string& rep = sd.source_rep.name();
    const std::size_t total = b.algebra.dim();
    if (rep == "adjoint") {
      const auto fs = add_casimirs_embedded(ca, total);
      const auto names = casimir_names(ca.type, ca.rank);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        sys.generators.push_back(hat_covariant(differential(fs[i]), sd));
        sys.names.push_back("hat(d " + names[i] + ")");
      }
      sys.construction = "basic invariants and hat lifts of their differentials";
      return sys;
    }
    if (rep == "sym2_traceless" || rep == "wedge2_reduced") {
      add_casimirs_embedded(ca, total);
      const CovariantFamily fam = ca.type == ClassicalType::C ? form_covariants(ca, covariant_count(ca.type, ca.rank))
                                                              : so_covariants(ca);
      for (std::size_t i = 0; i < fam.to_dual.size(); ++i) {
        sys.generators.push_back(hat_covariant(fam.to_dual[i], sd));
        sys.names.push_back("hat(x^" + std::to_string(fam.degrees[i]) + ")");
      }
      sys.construction = "basic invariants and hat lifts of the covariants x^{2i}";
      return sys;
    }
    throw std::invalid_argument("no generator system for representation '" + rep + "'");
  }
  if (b.classical && !b.is_borel && !b.semidirect && !b.takiff) {
    sys.generators = casimir_generators(*b.classical);
    sys.names = casimir_names(b.classical->type, b.classical->rank);
    sys.construction = "basic invariants";
    return sys;
  }
  throw std::invalid_argument("no generator system for '" + b.descriptor + "'");
}

InvariantCertificate certify_generators(const LieAlgebra& alg, const GeneratorSystem& system, std::size_t trials,
                                        std::uint64_t seed) {
  InvariantCertificate cert;
  const Representation ad = adjoint_representation(alg);
  cert.all_invariant = true;
  for (const auto& f : system.generators) {
    const bool inv = is_invariant(ad, f);
    cert.invariant.push_back(inv);
    cert.all_invariant = cert.all_invariant && inv;
  }
  cert.independence = certify_independence(system.generators, trials, seed);
  cert.index = index(alg, trials, seed);
  cert.count_matches_index = cert.index == system.generators.size();
  return cert;
}

}  // namespace takiff_lab

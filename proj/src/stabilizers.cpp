#include "takiff/stabilizers.hpp"

#include <stdexcept>

#include <json.hpp>

#include "takiff/sampling.hpp"

namespace takiff_lab {

namespace {

Matrix orbit_map(const Representation& rep, const Vector& v) {
  const std::size_t d = rep.algebra().dim();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(rep.action(i) * v);
  return Matrix::from_columns(cols, rep.dim_module());
}

long as_long(std::size_t n) { return static_cast<long>(n); }

}  // namespace

std::string to_json(const GenericityReport& r) {
  nlohmann::ordered_json j;
  j["point"] = nlohmann::json::array();
  for (const auto& c : r.point) j["point"].push_back(to_string(c));
  j["checks"] = r.checks;
  j["dims"] = r.dims;
  j["verdict"] = r.verdict;
  j["seed"] = r.seed;
  return j.dump();
}

GenericityReport elashvili_check(const Representation& rep, const Vector& v) {
  if (v.size() != rep.dim_module()) throw std::invalid_argument("elashvili_check: point has the wrong length");
  GenericityReport r;
  r.point = v;
  const Matrix m = orbit_map(rep, v);
  r.stabilizer = SubspaceBasis::null_space(m);
  const SubspaceBasis orbit = SubspaceBasis::column_space(m);
  const SubspaceBasis fixed = fixed_space(rep, r.stabilizer);
  const SubspaceBasis sum = subspace_sum(orbit, fixed);
  r.checks["orbit_plus_fixed_is_module"] = sum.dim() == rep.dim_module();
  r.dims["stabilizer"] = as_long(r.stabilizer.dim());
  r.dims["orbit"] = as_long(orbit.dim());
  r.dims["fixed"] = as_long(fixed.dim());
  r.dims["sum"] = as_long(sum.dim());
  r.verdict = r.checks["orbit_plus_fixed_is_module"];
  return r;
}

GenericityReport adjoint_generic_check(const LieAlgebra& alg, const Vector& x) {
  if (x.size() != alg.dim()) throw std::invalid_argument("adjoint_generic_check: point has the wrong length");
  GenericityReport r;
  r.point = x;
  const std::size_t d = alg.dim();
  const Matrix ad = ad_matrix(alg, x);
  r.stabilizer = SubspaceBasis::null_space(ad);
  const SubspaceBasis image = SubspaceBasis::column_space(ad);
  r.checks["commutative_centralizer"] = is_commutative(r.stabilizer, alg);
  r.checks["direct_sum"] = subspace_sum(image, r.stabilizer).dim() == d;
  r.verdict = r.checks["commutative_centralizer"] && r.checks["direct_sum"];
  r.checks["self_normalizing"] = normalizer(alg, r.stabilizer) == r.stabilizer;
  const Matrix co = Rational(-1) * ad.transpose();
  r.checks["coadjoint_split"] =
      subspace_sum(SubspaceBasis::column_space(co), SubspaceBasis::null_space(co)).dim() == d;
  r.dims["centralizer"] = as_long(r.stabilizer.dim());
  r.dims["orbit"] = as_long(image.dim());
  return r;
}

GenericityReport coadjoint_generic_check(const LieAlgebra& alg, const Vector& xi) {
  if (xi.size() != alg.dim()) throw std::invalid_argument("coadjoint_generic_check: covector has the wrong length");
  GenericityReport r;
  r.point = xi;
  r.stabilizer = SubspaceBasis::null_space(kirillov_form(alg, xi).matrix);
  const SubspaceBasis br = bracket_span(alg, SubspaceBasis::whole(alg.dim()), r.stabilizer);
  const std::size_t meet = intersection_dim(r.stabilizer, br);
  r.checks["trivial_intersection"] = meet == 0;
  r.checks["commutative_stabilizer"] = is_commutative(r.stabilizer, alg);
  r.verdict = meet == 0;
  r.dims["stabilizer"] = as_long(r.stabilizer.dim());
  r.dims["intersection"] = as_long(meet);
  return r;
}

bool near_toral_check(const LieAlgebra& alg, const SubspaceBasis& h) {
  if (!is_subalgebra(h, alg)) throw std::invalid_argument("near_toral_check: not a subalgebra");
  const SubspaceBasis br = bracket_span(alg, SubspaceBasis::whole(alg.dim()), h);
  return intersection_dim(br, centralizer(alg, h)) == 0;
}

GenericityReport sgp_transfer_check(const SemidirectData& sd, const Vector& x, std::uint64_t seed) {
  const Representation& rho = sd.source_rep;
  const LieAlgebra& g = rho.algebra();
  if (x.size() != g.dim()) throw std::invalid_argument("sgp_transfer_check: point has the wrong length");
  const std::size_t m = rho.dim_module();
  GenericityReport r;
  r.point = x;
  r.seed = seed;
  r.stabilizer = centralizer(g, x);
  const SubspaceBasis vx = fixed_space(rho, x);
  const SubspaceBasis vz = fixed_space(rho, r.stabilizer);
  const SubspaceBasis image = SubspaceBasis::column_space(rho.act(x));
  r.checks["x_generic"] = adjoint_generic_check(g, x).verdict;
  r.checks["fixed_spaces_agree"] = vx == vz;
  r.checks["module_split"] = subspace_sum(image, vx).dim() == m;
  r.verdict = r.checks["fixed_spaces_agree"] && r.checks["module_split"];

  Sampler s(seed);
  Vector v = zero_vector(m);
  for (const auto& b : vz.vectors()) v = v + Rational(s.integer(5)) * b;
  Vector lifted = x;
  lifted.insert(lifted.end(), v.begin(), v.end());
  r.checks["lift_generic"] = adjoint_generic_check(sd.total, lifted).verdict;

  r.dims["fixed_x"] = as_long(vx.dim());
  r.dims["fixed_centralizer"] = as_long(vz.dim());
  r.dims["image"] = as_long(image.dim());
  r.dims["centralizer"] = as_long(r.stabilizer.dim());
  return r;
}

YakobyReport yakoby_identities(const LieAlgebra& alg, const SubspaceBasis& h, const Vector& xi, std::size_t trials,
                               std::uint64_t seed) {
  if (!(SubspaceBasis::null_space(kirillov_form(alg, xi).matrix) == h)) {
    throw std::invalid_argument("yakoby_identities: h is not the stabilizer of xi");
  }
  YakobyReport y;
  y.near_toral = near_toral_check(alg, h);
  const SubspaceBasis z = centralizer(alg, h);
  y.split = subspace_sum(bracket_span(alg, SubspaceBasis::whole(alg.dim()), h), z).dim() == alg.dim();
  y.index_q = index(alg, trials, seed);
  y.index_centralizer = index(induced_subalgebra(alg, z), trials, seed);
  y.dim_h = h.dim();
  return y;
}

ContractionDims contraction_dims(const SemidirectData& sd, const LieAlgebra& g_ref, std::size_t trials,
                                 std::uint64_t seed) {
  if (!sd.origin) throw std::invalid_argument("contraction_dims: not built from an involution");
  const ContractionOrigin& o = *sd.origin;
  if (!(o.ambient == g_ref)) throw std::invalid_argument("contraction_dims: reference algebra is not the ambient one");
  const LieAlgebra& g0 = sd.source_rep.algebra();
  ContractionDims c;
  Sampler s(seed);
  std::size_t best = g0.dim() + 1;
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector y = s.vector(g0.dim(), Sampler::height_for_trial(t));
    const std::size_t cz = centralizer(g0, y).dim();
    if (cz < best) {
      best = cz;
      c.sample = y;
    }
  }
  const SubspaceBasis cartan = centralizer(g0, c.sample);
  c.rank_g0 = cartan.dim();
  c.fixed_g1 = fixed_space(sd.source_rep, cartan).dim();
  c.via_torus = c.rank_g0 + c.fixed_g1;
  Vector padded = c.sample;
  padded.resize(sd.total.dim());
  c.via_centralizer = centralizer(g_ref, o.to_ambient * padded).dim();
  c.index_contraction = index(sd.total, trials, seed);
  c.index_reference = index(g_ref, trials, seed);
  return c;
}

namespace {

// Smallest stabilizer wins; among equals, the first sample that passes.
template <class Check>
GenericityReport best_sample(std::size_t dim, std::size_t trials, std::uint64_t seed, Check check) {
  Sampler s(seed);
  GenericityReport best;
  bool have = false;
  for (std::size_t t = 0; t < trials; ++t) {
    GenericityReport r = check(s.vector(dim, Sampler::height_for_trial(t)));
    const bool better = !have || r.stabilizer.dim() < best.stabilizer.dim() ||
                        (r.stabilizer.dim() == best.stabilizer.dim() && r.verdict && !best.verdict);
    if (better) {
      best = std::move(r);
      have = true;
    }
  }
  best.seed = seed;
  return best;
}

}  // namespace

GenericityReport sampled_adjoint_check(const LieAlgebra& alg, std::size_t trials, std::uint64_t seed) {
  return best_sample(alg.dim(), trials, seed, [&](const Vector& x) { return adjoint_generic_check(alg, x); });
}

GenericityReport sampled_coadjoint_check(const LieAlgebra& alg, std::size_t trials, std::uint64_t seed) {
  return best_sample(alg.dim(), trials, seed, [&](const Vector& xi) { return coadjoint_generic_check(alg, xi); });
}

}  // namespace takiff_lab

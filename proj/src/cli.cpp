#include "takiff/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "takiff/builders.hpp"
#include "takiff/invariants.hpp"
#include "takiff/orbits.hpp"
#include "takiff/sampling.hpp"
#include "takiff/stabilizers.hpp"

namespace takiff_lab {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t trials = 8;
  unsigned jobs = 0;  // 0: not given on the command line
  std::string algebra;
  std::string file;
  std::string mode = "adjoint";
  std::size_t level = 1;
  bool certify = false;
  std::string inequality;
  std::string type;
  std::size_t max_rank = 0;
  long copies = 2;
  std::string partition;
  int max_size = 8;
};

unsigned resolve_jobs(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("TAKIFF_LAB_JOBS"); env && *env) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1) throw UsageError(std::string("TAKIFF_LAB_JOBS must be a positive integer, got ") + env);
    return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ClassicalType parse_type_flag(const std::string& s) {
  if (s.size() != 1) throw UsageError("--type takes one of A, B, C, D");
  try {
    return parse_type_letter(s[0]);
  } catch (const std::invalid_argument&) {
    throw UsageError("--type takes one of A, B, C, D");
  }
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format " + o.format + " is not available for this command");
}

AlgebraBundle load_bundle(const Options& o) {
  if (o.algebra.empty()) throw UsageError("--algebra is required");
  try {
    return parse_descriptor(o.algebra);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string header(const std::string& verb, const Options& o) {
  std::string h = "# " + verb;
  if (!o.algebra.empty()) h += " algebra=" + o.algebra;
  h += " trials=" + std::to_string(o.trials) + " seed=" + std::to_string(o.seed) + "\n";
  return h;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string point_string(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

ordered_json point_json(const Vector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

std::string combination(const SparseVector& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const auto& [k, c] = v[t];
    const bool neg = sgn(c) < 0;
    const Rational a = neg ? Rational(-c) : c;
    s += t == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (a != 1) s += to_string(a) + " ";
    s += labels[k];
  }
  return s;
}

// ---- construct / validate -------------------------------------------------

std::string describe_kind(const AlgebraBundle& b) {
  if (b.classical) return "classical";
  if (b.heisenberg_n) return "heisenberg";
  if (b.is_borel) return "borel";
  if (b.takiff) return "takiff";
  if (b.involution) return "z2_contraction";
  if (b.semidirect) return "semidirect";
  return "algebra";
}

int cmd_construct(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const AlgebraBundle b = load_bundle(o);
  const LieAlgebra& alg = b.algebra;
  if (o.format == "json") {
    ordered_json j;
    j["descriptor"] = b.descriptor;
    j["kind"] = describe_kind(b);
    const ordered_json structure = ordered_json::parse(to_json(alg));
    for (const auto& [k, v] : structure.items()) j[k] = v;
    if (b.semidirect) j["module_dim"] = b.semidirect->source_rep.dim_module();
    if (b.takiff) j["level"] = b.takiff->level;
    j["seed"] = o.seed;
    out << j.dump() << "\n";
    return exit_ok;
  }
  out << header("construct", o);
  out << "kind: " << describe_kind(b) << "\n";
  out << "dim: " << alg.dim() << "\n";
  if (b.semidirect) out << "module dim: " << b.semidirect->source_rep.dim_module() << "\n";
  if (b.takiff) out << "level: " << b.takiff->level << "\n";
  out << "basis:";
  for (const auto& l : alg.labels()) out << " " << l;
  out << "\n";
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      const SparseVector& br = alg.basis_bracket(i, j);
      if (!br.empty()) out << "[" << alg.labels()[i] << ", " << alg.labels()[j] << "] = " << combination(br, alg.labels()) << "\n";
    }
  return exit_ok;
}

int cmd_validate(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (o.algebra.empty() == o.file.empty()) throw UsageError("validate takes exactly one of --algebra, --file");
  ordered_json checks = ordered_json::object();
  std::size_t dim = 0;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot read " + o.file);
    std::stringstream ss;
    ss << in.rdbuf();
    LieAlgebra alg;
    try {
      alg = algebra_from_json(ss.str());
    } catch (const std::exception& e) {
      throw UsageError(std::string("malformed algebra file: ") + e.what());
    }
    dim = alg.dim();
    checks["jacobi"] = check_jacobi(alg).ok;
  } else {
    const AlgebraBundle b = load_bundle(o);
    dim = b.algebra.dim();
    checks["jacobi"] = check_jacobi(b.algebra).ok;
    if (b.classical)
      for (const auto& [name, rep] : b.classical->rep_catalog) checks["rep:" + name] = check_homomorphism(rep).ok;
    if (b.semidirect) checks["module_homomorphism"] = check_homomorphism(b.semidirect->source_rep).ok;
    if (b.involution) {
      const InvolutionReport r = check_involution(*b.involution);
      checks["involution_squares_to_identity"] = r.squares_to_identity;
      checks["involution_preserves_bracket"] = r.preserves_bracket;
    }
  }
  bool ok = true;
  for (const auto& [k, v] : checks.items()) ok = ok && v.get<bool>();
  if (o.format == "json") {
    ordered_json j;
    j["source"] = o.file.empty() ? o.algebra : o.file;
    j["dim"] = dim;
    j["checks"] = checks;
    j["ok"] = ok;
    j["seed"] = o.seed;
    out << j.dump() << "\n";
  } else {
    out << header("validate", o);
    out << "dim: " << dim << "\n";
    for (const auto& [k, v] : checks.items()) out << k << ": " << (v.get<bool>() ? "pass" : "FAIL") << "\n";
    out << "result: " << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? exit_ok : exit_check_failed;
}

// ---- index / generic / contraction ----------------------------------------

int cmd_index(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const AlgebraBundle b = load_bundle(o);
  const IndexResult r = index_report(b.algebra, o.trials, o.seed);
  if (o.format == "json") {
    ordered_json j;
    j["descriptor"] = b.descriptor;
    j["dim"] = b.algebra.dim();
    j["index"] = r.index;
    j["max_rank"] = r.max_rank;
    j["covector"] = point_json(r.best_covector);
    j["trials"] = o.trials;
    j["seed"] = o.seed;
    out << j.dump() << "\n";
  } else {
    out << header("index", o) << r.index << "\n";
  }
  return exit_ok;
}

GenericityReport sampled_elashvili(const Representation& rep, std::size_t trials, std::uint64_t seed) {
  Sampler s(seed);
  GenericityReport best;
  for (std::size_t t = 0; t < trials; ++t) {
    GenericityReport r = elashvili_check(rep, s.vector(rep.dim_module(), Sampler::height_for_trial(t)));
    if (t == 0 || r.stabilizer.dim() < best.stabilizer.dim() ||
        (r.stabilizer.dim() == best.stabilizer.dim() && r.verdict && !best.verdict))
      best = std::move(r);
  }
  best.seed = seed;
  return best;
}

int cmd_generic(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const AlgebraBundle b = load_bundle(o);
  GenericityReport r;
  if (o.mode == "adjoint") {
    r = sampled_adjoint_check(b.algebra, o.trials, o.seed);
  } else if (o.mode == "coadjoint") {
    r = sampled_coadjoint_check(b.algebra, o.trials, o.seed);
  } else if (o.mode == "sgp" || o.mode == "elashvili") {
    if (!b.semidirect) throw UsageError("--mode " + o.mode + " needs a semidirect descriptor (sd:... or z2:...)");
    const Representation& rho = b.semidirect->source_rep;
    if (o.mode == "sgp") {
      const GenericityReport x = sampled_adjoint_check(rho.algebra(), o.trials, o.seed);
      r = sgp_transfer_check(*b.semidirect, x.point, o.seed);
    } else {
      r = sampled_elashvili(rho, o.trials, o.seed);
    }
  } else {
    throw UsageError("--mode takes adjoint, coadjoint, sgp or elashvili");
  }
  if (o.format == "json") {
    ordered_json j;
    j["descriptor"] = b.descriptor;
    j["mode"] = o.mode;
    j["trials"] = o.trials;
    const ordered_json report = ordered_json::parse(to_json(r));
    for (const auto& [k, v] : report.items()) j[k] = v;
    out << j.dump() << "\n";
  } else {
    out << header("generic", o);
    out << "mode: " << o.mode << "\n";
    out << "point: " << point_string(r.point) << "\n";
    for (const auto& [k, v] : r.dims) out << "dim " << k << ": " << v << "\n";
    for (const auto& [k, v] : r.checks) out << k << ": " << yes_no(v) << "\n";
    out << "verdict: " << (r.verdict ? "generic" : "not generic") << "\n";
  }
  return r.verdict ? exit_ok : exit_check_failed;
}

int cmd_contraction(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const AlgebraBundle b = load_bundle(o);
  if (!b.semidirect || !b.semidirect->origin) throw UsageError("contraction needs a z2:... descriptor");
  const ContractionDims c = contraction_dims(*b.semidirect, b.semidirect->origin->ambient, o.trials, o.seed);
  if (o.format == "json") {
    ordered_json j;
    j["descriptor"] = b.descriptor;
    j["via_torus"] = c.via_torus;
    j["rank_g0"] = c.rank_g0;
    j["fixed_g1"] = c.fixed_g1;
    j["via_centralizer"] = c.via_centralizer;
    j["index_contraction"] = c.index_contraction;
    j["index_reference"] = c.index_reference;
    j["sample"] = point_json(c.sample);
    j["agree"] = c.agree();
    j["trials"] = o.trials;
    j["seed"] = o.seed;
    out << j.dump() << "\n";
  } else {
    out << header("contraction", o);
    out << "rk g0 + dim g1^t: " << c.rank_g0 << " + " << c.fixed_g1 << " = " << c.via_torus << "\n";
    out << "dim z_g(x): " << c.via_centralizer << "\n";
    out << "index of contraction: " << c.index_contraction << "\n";
    out << "index of ambient: " << c.index_reference << "\n";
    out << "sample: " << point_string(c.sample) << "\n";
    out << "agree: " << yes_no(c.agree()) << "\n";
  }
  return c.agree() ? exit_ok : exit_check_failed;
}

// ---- invariants / takiffize -------------------------------------------------

int cmd_invariants(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const AlgebraBundle b = load_bundle(o);
  GeneratorSystem sys;
  try {
    sys = generator_system(b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::optional<InvariantCertificate> cert;
  if (o.certify) cert = certify_generators(b.algebra, sys, o.trials, o.seed);

  if (o.format == "json") {
    ordered_json j;
    j["descriptor"] = b.descriptor;
    j["construction"] = sys.construction;
    j["generators"] = ordered_json::array();
    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
      ordered_json g;
      g["name"] = sys.names[i];
      g["degree"] = sys.generators[i].total_degree();
      g["polynomial"] = to_string(sys.generators[i]);
      if (cert) g["invariant"] = static_cast<bool>(cert->invariant[i]);
      j["generators"].push_back(g);
    }
    if (cert) {
      ordered_json c;
      c["all_invariant"] = cert->all_invariant;
      c["jacobian_rank"] = cert->independence.rank;
      c["count"] = cert->independence.count;
      c["points_used"] = cert->independence.points_used;
      c["independence"] =
          cert->independence.status == IndependenceStatus::independent ? "independent" : "inconclusive";
      c["index"] = cert->index;
      c["count_matches_index"] = cert->count_matches_index;
      c["ok"] = cert->ok();
      j["certificate"] = c;
    }
    j["trials"] = o.trials;
    j["seed"] = o.seed;
    out << j.dump() << "\n";
  } else {
    out << header("invariants", o);
    out << "construction: " << sys.construction << "\n";
    out << "generators: " << sys.generators.size() << "\n";
    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
      out << sys.names[i] << " (degree " << sys.generators[i].total_degree() << ")";
      if (cert) out << " invariant: " << yes_no(cert->invariant[i]);
      out << "\n  " << to_string(sys.generators[i]) << "\n";
    }
    if (cert) {
      out << "jacobian rank: " << cert->independence.rank << " of " << cert->independence.count << " ("
          << (cert->independence.status == IndependenceStatus::independent ? "independent" : "inconclusive")
          << ", " << cert->independence.points_used << " points)\n";
      out << "index: " << cert->index << "\n";
      out << "certified: " << yes_no(cert->ok()) << "\n";
    }
  }
  return !cert || cert->ok() ? exit_ok : exit_check_failed;
}

int cmd_takiffize(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const AlgebraBundle b = load_bundle(o);
  if (!b.classical) throw UsageError("takiffize needs a classical descriptor such as A2 or C2");
  const ClassicalAlgebra& ca = *b.classical;
  const std::vector<Polynomial> fs = casimir_generators(ca);
  const std::vector<std::string> names = casimir_names(ca.type, ca.rank);
  const TakiffData tk = takiff(ca.base, o.level);
  const Representation ad = adjoint_representation(tk.total);

  struct Row {
    std::string name;
    std::size_t power;
    Polynomial p;
    std::optional<bool> invariant;
  };
  std::vector<Row> rows;
  std::vector<Polynomial> all;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const EpsilonExpansion e = takiffize_invariant(fs[i], o.level);
    for (std::size_t k = 0; k < e.coefficients.size(); ++k) {
      Row r{names[i], k, e.coefficients[k], std::nullopt};
      if (o.certify) r.invariant = is_invariant(ad, r.p);
      rows.push_back(r);
      all.push_back(e.coefficients[k]);
    }
  }
  std::optional<IndependenceReport> ind;
  bool ok = true;
  if (o.certify) {
    ind = certify_independence(all, o.trials, o.seed);
    for (const auto& r : rows) ok = ok && *r.invariant;
    ok = ok && ind->status == IndependenceStatus::independent;
  }

  if (o.format == "json") {
    ordered_json j;
    j["descriptor"] = b.descriptor;
    j["level"] = o.level;
    j["coefficients"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json c;
      c["casimir"] = r.name;
      c["power"] = r.power;
      c["polynomial"] = to_string(r.p);
      if (r.invariant) c["invariant"] = *r.invariant;
      j["coefficients"].push_back(c);
    }
    if (ind) {
      j["jacobian_rank"] = ind->rank;
      j["expected_rank"] = (o.level + 1) * ca.rank;
      j["ok"] = ok;
    }
    j["trials"] = o.trials;
    j["seed"] = o.seed;
    out << j.dump() << "\n";
  } else {
    out << header("takiffize", o);
    out << "level: " << o.level << "\n";
    for (const auto& r : rows) {
      out << r.name << " [eps^" << r.power << "]";
      if (r.invariant) out << " invariant: " << yes_no(*r.invariant);
      out << "\n  " << to_string(r.p) << "\n";
    }
    if (ind) {
      out << "jacobian rank: " << ind->rank << " of " << (o.level + 1) * ca.rank << "\n";
      out << "certified: " << yes_no(ok) << "\n";
    }
  }
  return ok ? exit_ok : exit_check_failed;
}

// ---- sweep / oracle --------------------------------------------------------

std::string sweep_text(const SweepReport& r) {
  std::ostringstream s;
  s << "inequality: " << inequality_name(r.inequality) << "\n";
  s << "type: " << type_letter(r.type) << "\n";
  s << "max rank: " << r.max_rank << "\n";
  if (r.inequality == Inequality::not_vain) s << "copies: " << r.copies << "\n";
  s << "checked: " << r.entries.size() << "\n";
  s << "violations: " << r.violations.size() << "\n";
  for (const auto& e : r.violations)
    s << "  rank " << e.record.rank << " (" << to_string(e.record.partition) << ") value " << e.value << "\n";
  s << "equality cases: " << r.equality_cases.size() << "\n";
  for (const auto& e : r.equality_cases)
    s << "  rank " << e.record.rank << " (" << to_string(e.record.partition) << ")\n";
  if (r.inequality == Inequality::bril_takiff) s << "codimension form agrees: " << yes_no(r.codim_form_agrees) << "\n";
  return s.str();
}

int cmd_sweep(const Options& o, std::ostream& out, unsigned jobs) {
  if (o.inequality.empty() || o.type.empty() || o.max_rank == 0)
    throw UsageError("sweep needs --inequality, --type and --max-rank");
  Inequality q;
  try {
    q = parse_inequality(o.inequality);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const ClassicalType t = parse_type_flag(o.type);
  SweepReport r;
  try {
    r = q == Inequality::not_vain ? not_vain_bounds(t, o.max_rank, o.copies, jobs) : sweep(q, t, o.max_rank, jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.format == "json") {
    ordered_json j = ordered_json::parse(to_json(r));
    j["seed"] = o.seed;
    out << j.dump() << "\n";
  } else if (o.format == "tsv") {
    out << "# sweep inequality=" << inequality_name(q) << " type=" << type_letter(t) << " seed=" << o.seed << "\n";
    out << to_tsv(r);
  } else {
    out << "# sweep seed=" << o.seed << "\n" << sweep_text(r);
  }
  return r.ok() ? exit_ok : exit_check_failed;
}

int cmd_oracle(const Options& o, std::ostream& out, unsigned jobs) {
  if (o.type.empty()) throw UsageError("oracle needs --type");
  const ClassicalType t = parse_type_flag(o.type);
  std::vector<Partition> parts;
  try {
    if (!o.partition.empty()) {
      parts.push_back(parse_partition(t, o.partition));
    } else {
      if (o.max_size < 1 || o.max_size > 10) throw UsageError("--max-size must lie in 1..10");
      for (std::size_t r = t == ClassicalType::D ? 2 : 1; defining_size(t, r) <= o.max_size; ++r)
        for (auto& p : enumerate_partitions(t, defining_size(t, r))) parts.push_back(std::move(p));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  struct Row {
    OrbitRecord formula, oracle;
    bool agree = false;
  };
  std::vector<Row> rows(parts.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < parts.size();) {
      try {
        rows[i].formula = formula_record(parts[i]);
        rows[i].oracle = matrix_oracle(parts[i]);
      } catch (...) {
        std::lock_guard<std::mutex> g(failure_lock);
        if (!failure) failure = std::current_exception();
        continue;
      }
      const OrbitRecord& f = rows[i].formula;
      const OrbitRecord& m = rows[i].oracle;
      rows[i].agree = f.centralizer_dim == m.centralizer_dim && f.rank_dpi == m.rank_dpi &&
                      f.stratum_index == m.stratum_index && f.L_takiff == m.L_takiff && f.L_z2 == m.L_z2;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::min<std::size_t>(jobs, parts.size()); ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  bool ok = true;
  for (const auto& r : rows) ok = ok && r.agree;
  if (o.format == "json") {
    ordered_json j;
    j["type"] = std::string(1, type_letter(t));
    j["cases"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json c;
      c["partition"] = to_string(r.formula.partition);
      c["rank"] = r.formula.rank;
      c["centralizer_dim"] = {r.formula.centralizer_dim, r.oracle.centralizer_dim};
      c["rank_dpi"] = {r.formula.rank_dpi, r.oracle.rank_dpi};
      c["stratum"] = {r.formula.stratum_index, r.oracle.stratum_index};
      c["agree"] = r.agree;
      j["cases"].push_back(c);
    }
    j["all_agree"] = ok;
    j["seed"] = o.seed;
    out << j.dump() << "\n";
  } else {
    out << "# oracle type=" << type_letter(t) << " seed=" << o.seed << "\n";
    const char* sep = o.format == "tsv" ? "\t" : "  ";
    out << "partition" << sep << "rank" << sep << "centralizer_dim" << sep << "oracle_centralizer_dim" << sep
        << "rank_dpi" << sep << "oracle_rank_dpi" << sep << "stratum" << sep << "oracle_stratum" << sep << "agree\n";
    for (const auto& r : rows) {
      out << to_string(r.formula.partition) << sep << r.formula.rank << sep << r.formula.centralizer_dim << sep
          << r.oracle.centralizer_dim << sep << r.formula.rank_dpi << sep << r.oracle.rank_dpi << sep
          << r.formula.stratum_index << sep << r.oracle.stratum_index << sep << yes_no(r.agree) << "\n";
    }
    if (o.format == "text") out << "cases: " << rows.size() << ", all agree: " << yes_no(ok) << "\n";
  }
  return ok ? exit_ok : exit_check_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"takiff-lab: exact computations with semidirect products, Takiff algebras and contractions",
               "takiff-lab"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text, json or tsv")->check(CLI::IsMember({"text", "json", "tsv"}));
    c->add_option("--seed", o.seed, "sampling seed (default 0)");
    c->add_option("--trials", o.trials, "number of sampled points (default 8)")->check(CLI::PositiveNumber);
    c->add_option("--jobs", o.jobs, "worker threads (default: TAKIFF_LAB_JOBS, then all cores)")
        ->check(CLI::PositiveNumber);
  };
  auto with_algebra = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--algebra", o.algebra, "algebra descriptor, e.g. A2, takiff:A1:2, z2:A3:sp");
    if (required) opt->required();
    common(c);
  };

  auto* construct = app.add_subcommand("construct", "build an algebra and print its structure constants");
  with_algebra(construct);
  auto* validate = app.add_subcommand("validate", "check Jacobi and the module and involution axioms");
  with_algebra(validate, false);
  validate->add_option("--file", o.file, "algebra JSON as written by construct --format json");
  auto* idx = app.add_subcommand("index", "index by sampled exact covectors");
  with_algebra(idx);
  auto* generic = app.add_subcommand("generic", "generic stabilizer criteria at a sampled point");
  with_algebra(generic);
  generic->add_option("--mode", o.mode, "adjoint, coadjoint, sgp or elashvili");
  auto* tkz = app.add_subcommand("takiffize", "epsilon-expansion of the Casimirs of a classical algebra");
  with_algebra(tkz);
  tkz->add_option("--level", o.level, "truncation level n (default 1)");
  tkz->add_flag("--certify", o.certify, "check invariance and the Jacobian rank");
  auto* inv = app.add_subcommand("invariants", "candidate generators of the invariant ring");
  with_algebra(inv);
  inv->add_flag("--certify", o.certify, "check invariance, independence and the count against the index");
  auto* con = app.add_subcommand("contraction", "two computations of dim ka//K for a z2 contraction");
  with_algebra(con);
  auto* swp = app.add_subcommand("sweep", "evaluate an orbit inequality over all nilpotent orbits");
  common(swp);
  swp->add_option("--inequality", o.inequality, "bril-takiff, brilliant or not-vain");
  swp->add_option("--type", o.type, "A, B, C or D");
  swp->add_option("--max-rank", o.max_rank, "largest rank")->check(CLI::PositiveNumber);
  swp->add_option("--copies", o.copies, "number of module copies for not-vain (default 2)")
      ->check(CLI::PositiveNumber);
  auto* orc = app.add_subcommand("oracle", "compare the partition formulas with the matrix computation");
  common(orc);
  orc->add_option("--type", o.type, "A, B, C or D")->required();
  orc->add_option("--partition", o.partition, "a single partition, e.g. 3,2,2");
  orc->add_option("--max-size", o.max_size, "every partition up to this size (default 8, at most 10)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const unsigned jobs = resolve_jobs(o.jobs);
    if (construct->parsed()) return cmd_construct(o, out);
    if (validate->parsed()) return cmd_validate(o, out);
    if (idx->parsed()) return cmd_index(o, out);
    if (generic->parsed()) return cmd_generic(o, out);
    if (tkz->parsed()) return cmd_takiffize(o, out);
    if (inv->parsed()) return cmd_invariants(o, out);
    if (con->parsed()) return cmd_contraction(o, out);
    if (swp->parsed()) return cmd_sweep(o, out, jobs);
    if (orc->parsed()) return cmd_oracle(o, out, jobs);
  } catch (const UsageError& e) {
    err << "takiff-lab: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace takiff_lab

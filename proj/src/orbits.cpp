#include "takiff/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "takiff/polynomial.hpp"

namespace takiff_lab {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool is_valid_partition(ClassicalType type, const std::vector<int>& parts) {
  if (parts.empty()) return false;
  int size = 0;
  for (int p : parts) {
    if (p < 1) return false;
    size += p;
  }
  if (type == ClassicalType::A) return true;
  if (type == ClassicalType::B && size % 2 == 0) return false;
  if (type != ClassicalType::B && size % 2 == 1) return false;
  const int paired_parity = type == ClassicalType::C ? 1 : 0;
  for (int p : parts) {
    if (p % 2 == paired_parity && std::count(parts.begin(), parts.end(), p) % 2 != 0) return false;
  }
  return true;
}

Partition make_partition(ClassicalType type, std::vector<int> parts) {
  std::sort(parts.rbegin(), parts.rend());
  if (!is_valid_partition(type, parts)) {
    std::string s;
    for (int p : parts) s += (s.empty() ? "" : ",") + std::to_string(p);
    throw std::invalid_argument("invalid partition (" + s + ") for type " + type_letter(type));
  }
  return Partition{std::move(parts), type};
}

Partition parse_partition(ClassicalType type, const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad partition '" + text + "'");
    parts.push_back(v);
  }
  return make_partition(type, std::move(parts));
}

std::string to_string(const Partition& p) {
  std::string s;
  for (int x : p.parts) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

namespace {

void all_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    all_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

long sum_squares(const std::vector<int>& v) {
  long s = 0;
  for (int x : v) s += static_cast<long>(x) * x;
  return s;
}

long odd_parts(const std::vector<int>& parts) {
  return static_cast<long>(std::count_if(parts.begin(), parts.end(), [](int p) { return p % 2 == 1; }));
}

}  // namespace

std::vector<Partition> enumerate_partitions(ClassicalType type, int size) {
  if (size < 1) throw std::invalid_argument("partition size must be positive");
  if ((type == ClassicalType::B && size % 2 == 0) || ((type == ClassicalType::C || type == ClassicalType::D) && size % 2)) {
    throw std::invalid_argument(std::string("size ") + std::to_string(size) + " does not fit type " + type_letter(type));
  }
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  all_partitions(size, size, cur, raw);
  std::vector<Partition> out;
  for (auto& p : raw) {
    if (is_valid_partition(type, p)) out.push_back(Partition{std::move(p), type});
  }
  return out;
}

std::vector<int> dual(const std::vector<int>& parts) {
  std::vector<int> d;
  const int s = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
  for (int i = 1; i <= s; ++i) {
    d.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [&](int p) { return p >= i; })));
  }
  return d;
}

std::size_t algebra_rank(ClassicalType type, int size) {
  switch (type) {
    case ClassicalType::A: return static_cast<std::size_t>(size - 1);
    case ClassicalType::B: return static_cast<std::size_t>((size - 1) / 2);
    case ClassicalType::C:
    case ClassicalType::D: return static_cast<std::size_t>(size / 2);
  }
  return 0;
}

std::size_t algebra_dim(ClassicalType type, std::size_t r) {
  switch (type) {
    case ClassicalType::A: return (r + 1) * (r + 1) - 1;
    case ClassicalType::B:
    case ClassicalType::C: return r * (2 * r + 1);
    case ClassicalType::D: return r * (2 * r - 1);
  }
  return 0;
}

int defining_size(ClassicalType type, std::size_t r) {
  const int n = static_cast<int>(r);
  switch (type) {
    case ClassicalType::A: return n + 1;
    case ClassicalType::B: return 2 * n + 1;
    case ClassicalType::C:
    case ClassicalType::D: return 2 * n;
  }
  return 0;
}

long centralizer_dim(const Partition& p) {
  const long sq = sum_squares(dual(p.parts));
  switch (p.type) {
    case ClassicalType::A: return sq - 1;
    case ClassicalType::B:
    case ClassicalType::D: return (sq - odd_parts(p.parts)) / 2;
    case ClassicalType::C: return (sq + odd_parts(p.parts)) / 2;
  }
  return 0;
}

long rank_dpi(const Partition& p) {
  const long s = p.parts.front();
  switch (p.type) {
    case ClassicalType::A: return s - 1;
    case ClassicalType::B:
    case ClassicalType::C: return s / 2;
    case ClassicalType::D: break;
  }
  // Two-part branches first; (n, n) with n odd falls under the i odd branch.
  if (p.parts.size() == 2) {
    const long two_n = p.size();
    const long i = p.parts[1];
    if (i % 2 == 1) return (two_n - i + 1) / 2;
    if (p.parts[0] == p.parts[1]) return i / 2;
    throw std::logic_error("two-part D partition with unequal even parts");
  }
  return s / 2;
}

long stratum_index(const Partition& p, long m) {
  const long eta1 = p.parts.front();
  const long top = p.type == ClassicalType::A ? eta1 - 1 : (eta1 - 1) / 2;
  return std::min(m, top);
}

long pair_covariant_count(ClassicalType type, std::size_t rank) {
  const long n = static_cast<long>(rank);
  switch (type) {
    case ClassicalType::A:
    case ClassicalType::B: return n;
    case ClassicalType::C:
    case ClassicalType::D: return n - 1;
  }
  return 0;
}

long L_takiff(const Partition& p) {
  const long r = static_cast<long>(algebra_rank(p.type, p.size()));
  return centralizer_dim(p) + 2 * rank_dpi(p) - 3 * r;
}

long L_z2(const Partition& p) {
  if (p.type == ClassicalType::A) throw std::invalid_argument("L_z2: needs the fixed algebra of an sp or so pair");
  const std::size_t r = algebra_rank(p.type, p.size());
  const long m = pair_covariant_count(p.type, r);
  return centralizer_dim(p) - static_cast<long>(r) - 2 * (m - stratum_index(p, m));
}

long springer_fiber_dim(const Partition& p) {
  return (centralizer_dim(p) - static_cast<long>(algebra_rank(p.type, p.size()))) / 2;
}

OrbitRecord formula_record(const Partition& p) {
  OrbitRecord rec;
  rec.partition = p;
  rec.rank = algebra_rank(p.type, p.size());
  rec.centralizer_dim = centralizer_dim(p);
  rec.rank_dpi = rank_dpi(p);
  rec.stratum_index = stratum_index(p, pair_covariant_count(p.type, rec.rank));
  rec.L_takiff = L_takiff(p);
  if (p.type != ClassicalType::A) rec.L_z2 = L_z2(p);
  return rec;
}

namespace {

// tr(A B) for dense matrices.
Rational trace_product(const Matrix& a, const Matrix& b) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) != 0 && sgn(b(j, i)) != 0) t += a(i, j) * b(j, i);
    }
  return t;
}

// d/dt Pf(G (X + t B)) at t = 0.
Rational pfaffian_derivative(const Matrix& g, const Matrix& x, const Matrix& b) {
  const Matrix gx = g * x, gb = g * b;
  const std::size_t n = x.rows();
  PolyMatrix m(n, 1);
  const Polynomial t = Polynomial::variable(1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Polynomial::constant(1, gx(i, j)) + gb(i, j) * t;
    }
  const Polynomial pf = pfaffian(m);
  for (const auto& [mono, c] : pf.terms()) {
    if (mono[0] == 1) return c;
  }
  return 0;
}

}  // namespace

OrbitRecord matrix_oracle(const Partition& p, int max_size) {
  if (p.size() > max_size) throw std::invalid_argument("matrix_oracle: partition too large for the matrix model");
  if (!is_valid_partition(p.type, p.parts)) throw std::invalid_argument("matrix_oracle: invalid partition");
  const NilpotentModel model = nilpotent_from_partition(p.type, p.parts);
  const ClassicalAlgebra& ca = model.algebra;
  const Matrix& x = model.matrix;
  const std::size_t n = ca.rank;
  const std::vector<Matrix>& basis = ca.matrices.basis();

  OrbitRecord rec;
  rec.partition = p;
  rec.rank = n;
  rec.centralizer_dim = static_cast<long>(centralizer(ca.base, model.x).dim());

  // Differentials of the basic invariants at x, written against the basis.
  std::vector<unsigned> grad_powers;
  if (p.type == ClassicalType::A) {
    for (unsigned k = 2; k <= n + 1; ++k) grad_powers.push_back(k - 1);
  } else {
    const std::size_t count = p.type == ClassicalType::D ? n - 1 : n;
    for (unsigned i = 1; i <= count; ++i) grad_powers.push_back(2 * i - 1);
  }
  std::vector<Vector> grads;
  for (unsigned k : grad_powers) {
    const Matrix xk = power(x, k);
    Vector v(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) v[b] = trace_product(xk, basis[b]);
    grads.push_back(std::move(v));
  }
  if (p.type == ClassicalType::D) {
    Vector v(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) v[b] = pfaffian_derivative(ca.form->matrix, x, basis[b]);
    grads.push_back(std::move(v));
  }
  rec.rank_dpi = static_cast<long>(rank(grads, basis.size()));

  // Covariant values: x^k (type A) or x^{2i} (B, C, D). Nilpotent, so already
  // traceless.
  const long m = pair_covariant_count(p.type, n);
  std::vector<Vector> values;
  for (long i = 1; i <= m; ++i) {
    const unsigned k = p.type == ClassicalType::A ? static_cast<unsigned>(i) : static_cast<unsigned>(2 * i);
    values.push_back(flatten(power(x, k)));
  }
  rec.stratum_index = static_cast<long>(rank(values, x.rows() * x.cols()));

  rec.L_takiff = rec.centralizer_dim + 2 * rec.rank_dpi - 3 * static_cast<long>(n);
  if (p.type != ClassicalType::A) {
    rec.L_z2 = rec.centralizer_dim - static_cast<long>(n) - 2 * (m - rec.stratum_index);
  }
  return rec;
}

std::string inequality_name(Inequality q) {
  switch (q) {
    case Inequality::bril_takiff: return "bril-takiff";
    case Inequality::brilliant: return "brilliant";
    case Inequality::not_vain: return "not-vain";
  }
  return "";
}

Inequality parse_inequality(const std::string& s) {
  if (s == "bril-takiff" || s == "bril_takiff") return Inequality::bril_takiff;
  if (s == "brilliant") return Inequality::brilliant;
  if (s == "not-vain" || s == "not_vain") return Inequality::not_vain;
  throw std::invalid_argument("unknown inequality '" + s + "'");
}

namespace {

SweepReport run_sweep(Inequality q, ClassicalType type, std::size_t max_rank, long copies, unsigned jobs) {
  if (max_rank < 1) throw std::invalid_argument("sweep: max_rank must be at least 1");
  if (q == Inequality::brilliant && type == ClassicalType::A) {
    throw std::invalid_argument("sweep: brilliant needs the fixed algebra type B, C or D");
  }
  if (q == Inequality::not_vain && copies < 1) throw std::invalid_argument("sweep: copies must be at least 1");
  SweepReport rep;
  rep.inequality = q;
  rep.type = type;
  rep.max_rank = max_rank;
  rep.copies = copies;

  std::vector<Partition> parts;
  const std::size_t first = type == ClassicalType::D ? 2 : 1;
  for (std::size_t r = first; r <= max_rank; ++r) {
    for (auto& p : enumerate_partitions(type, defining_size(type, r))) parts.push_back(std::move(p));
  }

  std::vector<SweepEntry> entries(parts.size());
  std::vector<char> codim_ok(parts.size(), 1);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < parts.size(); i = next++) {
      SweepEntry e;
      e.record = formula_record(parts[i]);
      const OrbitRecord& rec = e.record;
      const long r = static_cast<long>(rec.rank);
      switch (q) {
        case Inequality::bril_takiff: {
          e.value = rec.L_takiff;
          // codim of the orbit in the nilpotent cone against 2 (m - rk d pi), m = rk g.
          const long dim_g = static_cast<long>(algebra_dim(type, rec.rank));
          const long codim = (dim_g - r) - (dim_g - rec.centralizer_dim);
          codim_ok[i] = (codim >= 2 * (r - rec.rank_dpi)) == (rec.L_takiff >= 0);
          break;
        }
        case Inequality::brilliant: e.value = *rec.L_z2; break;
        case Inequality::not_vain: e.value = rec.centralizer_dim - r - copies * (r - rec.rank_dpi); break;
      }
      entries[i] = std::move(e);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(parts.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  rep.codim_form_agrees = std::all_of(codim_ok.begin(), codim_ok.end(), [](char c) { return c != 0; });
  for (const auto& e : entries) {
    if (e.value < 0) rep.violations.push_back(e);
    if (e.value == 0) rep.equality_cases.push_back(e);
  }
  rep.entries = std::move(entries);
  return rep;
}

}  // namespace

SweepReport sweep(Inequality q, ClassicalType type, std::size_t max_rank, unsigned jobs) {
  if (q == Inequality::not_vain) throw std::invalid_argument("sweep: use not_vain_bounds for the not-vain condition");
  return run_sweep(q, type, max_rank, 0, jobs);
}

SweepReport not_vain_bounds(ClassicalType type, std::size_t max_rank, long copies, unsigned jobs) {
  return run_sweep(Inequality::not_vain, type, max_rank, copies, jobs);
}

std::string to_tsv(const SweepReport& r) {
  std::ostringstream os;
  os << "partition\trank\tcentralizer_dim\trank_dpi\tL\tstratum\n";
  for (const auto& e : r.entries) {
    os << to_string(e.record.partition) << '\t' << e.record.rank << '\t' << e.record.centralizer_dim << '\t'
       << e.record.rank_dpi << '\t' << e.value << '\t' << e.record.stratum_index << '\n';
  }
  return os.str();
}

std::string to_json(const SweepReport& r) {
  auto item = [](const SweepEntry& e) {
    nlohmann::ordered_json j;
    j["rank"] = e.record.rank;
    j["partition"] = to_string(e.record.partition);
    j["L"] = e.value;
    return j;
  };
  nlohmann::ordered_json j;
  j["inequality"] = inequality_name(r.inequality);
  j["type"] = std::string(1, type_letter(r.type));
  j["max_rank"] = r.max_rank;
  if (r.inequality == Inequality::not_vain) j["copies"] = r.copies;
  j["checked"] = r.entries.size();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& e : r.violations) j["violations"].push_back(item(e));
  j["equality_cases"] = nlohmann::ordered_json::array();
  for (const auto& e : r.equality_cases) j["equality_cases"].push_back(item(e));
  if (r.inequality == Inequality::bril_takiff) j["codim_form_agrees"] = r.codim_form_agrees;
  return j.dump();
}

}  // namespace takiff_lab

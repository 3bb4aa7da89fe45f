#include "takiff/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace takiff_lab {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

unsigned degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

std::vector<Polynomial::Term> finish(Accumulator& acc) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) terms.emplace_back(m, std::move(c));
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  return terms;
}

unsigned weight_of(const Monomial& m, const std::vector<unsigned>& w) {
  unsigned s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * w[i];
  return s;
}

}  // namespace

bool grlex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Polynomial::Polynomial(std::size_t num_vars, std::vector<Term> terms) : num_vars_(num_vars) {
  Accumulator acc;
  for (auto& [m, c] : terms) {
    if (m.size() != num_vars) throw std::invalid_argument("Polynomial: monomial length does not match num_vars");
    acc[m] += c;
  }
  terms_ = finish(acc);
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw std::invalid_argument("Polynomial::variable: index out of range");
  Polynomial p(num_vars);
  Monomial m(num_vars, 0);
  m[i] = 1;
  p.terms_.emplace_back(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::linear(std::size_t num_vars, const Vector& coeffs, std::size_t offset) {
  if (offset + coeffs.size() > num_vars) throw std::invalid_argument("Polynomial::linear: too many coefficients");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    Monomial m(num_vars, 0);
    m[offset + i] = 1;
    terms.emplace_back(std::move(m), coeffs[i]);
  }
  return Polynomial(num_vars, std::move(terms));
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.front().first));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = degree_of(terms_.front().first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return degree_of(t.first) == d; });
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= num_vars_) throw std::invalid_argument("Polynomial::derivative: variable out of range");
  Accumulator acc;
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    acc[d] += c * m[var];
  }
  Polynomial p(num_vars_);
  p.terms_ = finish(acc);
  return p;
}

Rational Polynomial::evaluate(const Vector& point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("Polynomial::evaluate: dimension mismatch");
  std::vector<std::vector<Rational>> powers(num_vars_);
  auto power_of = [&](std::size_t i, unsigned e) -> const Rational& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Rational(1));
    while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
    return pw[e];
  };
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_ && sgn(t) != 0; ++i) {
      if (m[i] != 0) t *= power_of(i, m[i]);
    }
    s += t;
  }
  return s;
}

Polynomial Polynomial::embed(std::size_t num_vars, std::size_t offset) const {
  if (offset + num_vars_ > num_vars) throw std::invalid_argument("Polynomial::embed: target too small");
  Polynomial p(num_vars);
  for (const auto& [m, c] : terms_) {
    Monomial e(num_vars, 0);
    std::copy(m.begin(), m.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    p.terms_.emplace_back(std::move(e), c);
  }
  return p;
}

Polynomial Polynomial::weighted_part(const std::vector<unsigned>& weights, unsigned weight) const {
  if (weights.size() != num_vars_) throw std::invalid_argument("weighted_part: weight vector length mismatch");
  Polynomial p(num_vars_);
  for (const auto& t : terms_) {
    if (weight_of(t.first, weights) == weight) p.terms_.push_back(t);
  }
  return p;
}

long Polynomial::max_variable() const {
  long best = -1;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = m.size(); i-- > 0;) {
      if (m[i] != 0) {
        best = std::max(best, static_cast<long>(i));
        break;
      }
    }
  return best;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("polynomial sum: variable count mismatch");
  Polynomial p(a.num_vars_);
  auto greater = [](const Monomial& x, const Monomial& y) { return grlex_less(y, x); };
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && greater(a.terms_[i].first, b.terms_[j].first))) {
      p.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || greater(b.terms_[j].first, a.terms_[i].first)) {
      p.terms_.push_back(b.terms_[j++]);
    } else {
      Rational c = a.terms_[i].second + b.terms_[j].second;
      if (sgn(c) != 0) p.terms_.emplace_back(a.terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return p;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial p = a;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (sgn(c) == 0) return Polynomial(a.num_vars_);
  Polynomial p = a;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return truncated_product(a, b, {}, ~0u);
}

Polynomial truncated_product(const Polynomial& a, const Polynomial& b, const std::vector<unsigned>& weights,
                             unsigned max_weight) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("polynomial product: variable count mismatch");
  const std::size_t n = a.num_vars();
  const bool truncate = !weights.empty();
  if (truncate && weights.size() != n) throw std::invalid_argument("truncated_product: weight vector length mismatch");
  Accumulator acc;
  Monomial m(n);
  for (const auto& [ma, ca] : a.terms()) {
    const unsigned wa = truncate ? weight_of(ma, weights) : 0;
    if (truncate && wa > max_weight) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (truncate && wa + weight_of(mb, weights) > max_weight) continue;
      for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      acc[m] += ca * cb;
    }
  }
  return Polynomial(n, finish(acc));
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial r = Polynomial::constant(p.num_vars(), 1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images, const std::vector<unsigned>& weights,
                      unsigned max_weight) {
  if (images.size() != p.num_vars()) throw std::invalid_argument("substitute: need one image per variable");
  if (images.empty()) return p;
  const std::size_t target = images.front().num_vars();
  const bool truncate = !weights.empty();
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
    while (pw.size() <= e) {
      pw.push_back(truncate ? truncated_product(pw.back(), images[i], weights, max_weight) : pw.back() * images[i]);
    }
    return pw[e];
  };
  Polynomial result(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] == 0) continue;
      const Polynomial& f = power_of(i, m[i]);
      t = truncate ? truncated_product(t, f, weights, max_weight) : t * f;
    }
    result += t;
  }
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c;
    if (first) {
      if (sgn(c) < 0) {
        out += "-";
        mag = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) mag = -c;
    }
    first = false;
    out += to_string(mag);
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += "x" + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (!mono.empty()) out += " * " + mono;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& s, std::size_t n) : s_(s), n_(n) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto t = term();
      if (negative) t.second = -t.second;
      terms.push_back(std::move(t));
      skip();
      if (pos_ == s_.size()) break;
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
    }
    return Polynomial(n_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }
  Polynomial::Term term() {
    Rational c = 1;
    Monomial m(n_, 0);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        num += "/" + digits();
      }
      c = parse_rational(num);
      if (peek() != '*') return {m, c};
      ++pos_;
    }
    bool any = false;
    while (peek() == 'x') {
      ++pos_;
      const std::size_t var = std::stoul(digits());
      if (var >= n_) fail("variable index out of range");
      unsigned e = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        e = static_cast<unsigned>(std::stoul(digits()));
      }
      m[var] = static_cast<std::uint16_t>(m[var] + e);
      any = true;
      if (peek() == '*') ++pos_;
    }
    if (!any) fail("expected a variable");
    return {m, c};
  }

  const std::string& s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t num_vars) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.substr(i) == "0") return Polynomial(num_vars);
  return PolyParser(text, num_vars).parse();
}

std::string to_json(const Polynomial& p) {
  nlohmann::json j;
  j["num_vars"] = p.num_vars();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) mono.push_back({i, m[i]});
    }
    terms.push_back({to_string(c), mono});
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

Polynomial polynomial_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const auto n = j.at("num_vars").get<std::size_t>();
    std::vector<Polynomial::Term> terms;
    for (const auto& t : j.at("terms")) {
      Monomial m(n, 0);
      for (const auto& ve : t.at(1)) {
        const auto v = ve.at(0).get<std::size_t>();
        if (v >= n) throw std::invalid_argument("polynomial JSON: variable index out of range");
        m[v] = static_cast<std::uint16_t>(m[v] + ve.at(1).get<unsigned>());
      }
      terms.emplace_back(std::move(m), parse_rational(t.at(0).get<std::string>()));
    }
    return Polynomial(n, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
  }
}

PolyMatrix::PolyMatrix(std::size_t n, std::size_t num_vars)
    : n_(n), num_vars_(num_vars), entries_(n * n, Polynomial(num_vars)) {}

Polynomial PolyMatrix::trace() const {
  Polynomial t(num_vars_);
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_ || a.num_vars_ != b.num_vars_) throw std::invalid_argument("PolyMatrix product: shape mismatch");
  PolyMatrix r(a.n_, a.num_vars_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Polynomial& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    }
  return r;
}

Polynomial pfaffian(const PolyMatrix& a) {
  const std::size_t n = a.n();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: matrix size must be even");
  if (n > 24) throw std::invalid_argument("pfaffian: matrix too large");
  std::map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::uint32_t set) -> Polynomial {
    if (set == 0) return Polynomial::constant(a.num_vars(), 1);
    auto it = memo.find(set);
    if (it != memo.end()) return it->second;
    std::size_t i = 0;
    while (!(set >> i & 1u)) ++i;
    const std::uint32_t rest = set & ~(1u << i);
    Polynomial sum(a.num_vars());
    int position = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(rest >> j & 1u)) continue;
      ++position;
      if (a(i, j).is_zero()) continue;
      const Polynomial sub = self(self, rest & ~(1u << j));
      const Polynomial t = a(i, j) * sub;
      sum = position % 2 == 1 ? sum + t : sum - t;
    }
    memo.emplace(set, sum);
    return sum;
  };
  return rec(rec, (1u << n) - 1);
}

}  // namespace takiff_lab

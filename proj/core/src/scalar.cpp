#include "hopfcert/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hopfcert {

QPoly qpoly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly qpoly_mul(const QPoly &a, const QPoly &b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return qpoly_trim(std::move(out));
}

QPoly qpoly_sub(const QPoly &a, const QPoly &b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return qpoly_trim(std::move(out));
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly &a, const QPoly &b) {
  QPoly bb = qpoly_trim(b);
  if (bb.empty()) throw field_error("polynomial division by zero");
  QPoly r = qpoly_trim(a);
  if (r.size() < bb.size()) return {{}, r};
  QPoly q(r.size() - bb.size() + 1, Rational(0));
  const Rational &lead = bb.back();
  for (size_t i = q.size(); i-- > 0;) {
    if (r.size() < bb.size() + i || r[bb.size() - 1 + i] == 0) continue;
    Rational c = r[bb.size() - 1 + i] / lead;
    q[i] = c;
    for (size_t j = 0; j < bb.size(); ++j) r[i + j] -= c * bb[j];
    r = qpoly_trim(std::move(r));
  }
  return {qpoly_trim(std::move(q)), qpoly_trim(std::move(r))};
}

unsigned euler_phi(unsigned m) {
  unsigned result = m, p = 2;
  while (p * p <= m) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
    ++p;
  }
  if (m > 1) result -= result / m;
  return result;
}

QPoly cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw field_error("cyclotomic index must be positive");
  static std::map<unsigned, QPoly> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  QPoly num(m + 1, Rational(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [q, r] = qpoly_divmod(num, cyclotomic_polynomial(d));
    if (!r.empty()) throw field_error("cyclotomic division not exact");
    num = std::move(q);
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(m, num);
  return num;
}

Scalar::Scalar(FieldSpec spec, QPoly coeffs) : spec_(spec) {
  // Reduce modulo Phi_m so the residue is canonical.
  auto [q, r] = qpoly_divmod(coeffs, cyclotomic_polynomial(spec.conductor));
  (void)q;
  coeffs_.assign(spec.degree(), Rational(0));
  for (size_t i = 0; i < r.size(); ++i) coeffs_[i] = r[i];
}

Scalar Scalar::zeta(FieldSpec spec) {
  return Scalar(spec, QPoly{Rational(0), Rational(1)});
}

bool Scalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational &c) { return c == 0; });
}

bool Scalar::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational &c) { return c == 0; });
}

Rational Scalar::rational_value() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) throw field_error("scalar is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void Scalar::check_same(const Scalar &a, const Scalar &b) {
  if (a.spec_ != b.spec_)
    throw field_error("scalars live in different fields");
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto &c : out.coeffs_) c = -c;
  return out;
}

Scalar operator+(const Scalar &a, const Scalar &b) {
  Scalar::check_same(a, b);
  Scalar out = a;
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

Scalar operator-(const Scalar &a, const Scalar &b) { return a + (-b); }

Scalar operator*(const Scalar &a, const Scalar &b) {
  Scalar::check_same(a, b);
  return Scalar(a.spec_, qpoly_mul(a.coeffs_, b.coeffs_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw field_error("division by zero");
  // Extended Euclid in Q[x] against Phi_m: find u with u*a = 1 (mod Phi_m).
  QPoly r0 = cyclotomic_polynomial(spec_.conductor);
  QPoly r1 = qpoly_trim(coeffs_);
  QPoly s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r2] = qpoly_divmod(r0, r1);
    QPoly s2 = qpoly_sub(s0, qpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw field_error("non-invertible residue");
  QPoly inv = s0;
  for (auto &c : inv) c /= r0[0];
  return Scalar(spec_, std::move(inv));
}

Scalar operator/(const Scalar &a, const Scalar &b) { return a * b.inverse(); }

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e)
                          : static_cast<unsigned long>(e);
  Scalar out = Scalar::one(spec_);
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.spec_ != b.spec_) return false;
  return a.coeffs_ == b.coeffs_;
}

bool operator<(const Scalar &a, const Scalar &b) {
  if (a.spec_.conductor != b.spec_.conductor)
    return a.spec_.conductor < b.spec_.conductor;
  return a.coeffs_ < b.coeffs_;
}

static std::string render_rational(const Rational &r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string Scalar::render() const {
  if (spec_.degree() == 1 || spec_.is_rational())
    return render_rational(coeffs_.empty() ? Rational(0) : coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << render_rational(coeffs_[i]) << ")";
    if (i == 1)
      os << "*z";
    else if (i > 1)
      os << "*z^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

struct ScalarParser {
  const std::string &s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Rational parse_rational() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    }
    if (pos == start) throw field_error("expected a rational in: " + s);
    return Rational(s.substr(start, pos - start));
  }
  // term := [sign] coef ["*z" ["^" k]] | [sign] "z" ["^" k]
  void parse_term(QPoly &coeffs) {
    skip_ws();
    Rational sign(1);
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
      skip_ws();
    }
    Rational coef(1);
    bool have_coef = false;
    if (eat('(')) {
      coef = parse_rational();
      if (!eat(')')) throw field_error("unbalanced parenthesis in: " + s);
      have_coef = true;
    } else if (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])))) {
      coef = parse_rational();
      have_coef = true;
    }
    size_t power = 0;
    skip_ws();
    if (have_coef && pos < s.size() && s[pos] == '*') ++pos;
    skip_ws();
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      power = 1;
      if (eat('^')) {
        Rational k = parse_rational();
        power = static_cast<size_t>(numerator(k).convert_to<long>());
      }
    } else if (!have_coef) {
      throw field_error("expected a term in: " + s);
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
    coeffs[power] += sign * coef;
  }
};

}  // namespace

Scalar Scalar::parse(FieldSpec spec, const std::string &text) {
  ScalarParser p{text};
  QPoly coeffs;
  p.skip_ws();
  if (p.pos == text.size()) throw field_error("empty scalar text");
  while (true) {
    p.parse_term(coeffs);
    p.skip_ws();
    if (p.pos == text.size()) break;
    if (text[p.pos] != '+' && text[p.pos] != '-')
      throw field_error("trailing junk in scalar: " + text);
  }
  return Scalar(spec, std::move(coeffs));
}

Scalar root_of_unity(FieldSpec spec, unsigned order) {
  if (order == 0) throw field_error("root order must be positive");
  if (order == 1) return Scalar::one(spec);
  if (order == 2) return -Scalar::one(spec);
  if (spec.is_rational())
    throw field_error("Q has no root of unity of order " +
                      std::to_string(order));
  if (spec.conductor % order != 0)
    throw field_error("no root of order " + std::to_string(order) +
                      " in Q(zeta_" + std::to_string(spec.conductor) + ")");
  return Scalar::zeta(spec).pow(spec.conductor / order);
}

unsigned multiplicative_order(const Scalar &a, unsigned bound) {
  Scalar p = a;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p = p * a;
  }
  return 0;
}

}  // namespace hopfcert

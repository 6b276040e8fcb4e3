#include "hopfcert/ncpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfcert {

uint16_t Alphabet::add(GenSymbol s) {
  for (const auto &existing : symbols)
    if (existing.name == s.name)
      throw std::invalid_argument("duplicate generator name: " + s.name);
  symbols.push_back(std::move(s));
  return static_cast<uint16_t>(symbols.size() - 1);
}

uint16_t Alphabet::id_of(const std::string &name) const {
  for (size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i].name == name) return static_cast<uint16_t>(i);
  throw std::invalid_argument("unknown generator: " + name);
}

Alphabet Alphabet::matrix_generators(int n) {
  Alphabet a;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a.add({"t[" + std::to_string(i) + "][" + std::to_string(j) + "]",
             SymbolSort::MatrixGenerator, i, j});
  return a;
}

uint16_t Alphabet::t(int i, int j) const {
  for (size_t k = 0; k < symbols.size(); ++k)
    if (symbols[k].sort == SymbolSort::MatrixGenerator &&
        symbols[k].row == i && symbols[k].col == j)
      return static_cast<uint16_t>(k);
  throw std::invalid_argument("no matrix generator with those indices");
}

NcPoly::NcPoly(FieldSpec spec, const Word &w, Scalar c) : spec_(spec) {
  if (!c.is_zero()) terms_.emplace(w, std::move(c));
}

size_t NcPoly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

const std::pair<const Word, Scalar> &NcPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return *terms_.rbegin();
}

Scalar NcPoly::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(spec_) : it->second;
}

void NcPoly::add_term(const Word &w, const Scalar &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly out(spec_);
  for (const auto &[w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

NcPoly operator+(const NcPoly &a, const NcPoly &b) {
  NcPoly out = a;
  for (const auto &[w, c] : b.terms_) out.add_term(w, c);
  return out;
}

NcPoly operator-(const NcPoly &a, const NcPoly &b) {
  NcPoly out = a;
  for (const auto &[w, c] : b.terms_) out.add_term(w, -c);
  return out;
}

NcPoly operator*(const NcPoly &a, const NcPoly &b) {
  NcPoly out(a.spec_.degree() >= b.spec_.degree() ? a.spec_ : b.spec_);
  for (const auto &[wa, ca] : a.terms_)
    for (const auto &[wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

NcPoly NcPoly::scaled(const Scalar &c) const {
  NcPoly out(spec_);
  if (c.is_zero()) return out;
  for (const auto &[w, coef] : terms_) out.terms_.emplace(w, coef * c);
  return out;
}

bool operator<(const NcPoly &a, const NcPoly &b) {
  auto ai = a.terms_.rbegin(), bi = b.terms_.rbegin();
  DegLexLess less;
  for (; ai != a.terms_.rend() && bi != b.terms_.rend(); ++ai, ++bi) {
    if (ai->first != bi->first) return less(ai->first, bi->first);
    if (ai->second != bi->second) return ai->second < bi->second;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string NcPoly::render(const Alphabet &alphabet) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Canonical monomial order, highest term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.render() << ")";
    for (uint16_t id : it->first) os << "*" << alphabet.symbols.at(id).name;
  }
  return os.str();
}

}  // namespace hopfcert

#ifndef HOPFCERT_NCPOLY_HPP
#define HOPFCERT_NCPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfcert/scalar.hpp"

namespace hopfcert {

enum class SymbolSort : uint8_t {
  MatrixGenerator,
  Grouplike,
  GrouplikeInverse,
  Auxiliary,
};

/// One free generator. Matrix generators carry their (row, col) pair,
/// 1-based as in the usual t[i][j] notation.
struct GenSymbol {
  std::string name;
  SymbolSort sort = SymbolSort::Auxiliary;
  int row = 0;
  int col = 0;

  friend bool operator==(const GenSymbol &a, const GenSymbol &b) {
    return a.name == b.name;
  }
};

/// Ordered generator list of one presented algebra. The position in
/// `symbols` is the symbol id, and the id order is the generator order
/// used by the monomial order (so the declaration order is the
/// user-overridable generator order).
struct Alphabet {
  std::vector<GenSymbol> symbols;

  size_t size() const { return symbols.size(); }
  uint16_t add(GenSymbol s);
  uint16_t id_of(const std::string &name) const;  // throws if absent

  /// Row-major matrix generators t[1][1] < t[1][2] < ... < t[n][n].
  static Alphabet matrix_generators(int n);
  uint16_t t(int i, int j) const;  // id of t[i][j], 1-based
};

/// A word in the free monoid on the alphabet; empty word is 1.
using Word = std::vector<uint16_t>;

/// Degree-lexicographic order on words, generator order = id order.
struct DegLexLess {
  bool operator()(const Word &a, const Word &b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Noncommutative polynomial: finite map word -> nonzero coefficient.
class NcPoly {
public:
  using TermMap = std::map<Word, Scalar, DegLexLess>;

  explicit NcPoly(FieldSpec spec = FieldSpec()) : spec_(spec) {}
  NcPoly(FieldSpec spec, const Word &w, Scalar c);

  static NcPoly zero(FieldSpec spec) { return NcPoly(spec); }
  static NcPoly one(FieldSpec spec) {
    return NcPoly(spec, Word{}, Scalar::one(spec));
  }
  static NcPoly generator(FieldSpec spec, uint16_t id) {
    return NcPoly(spec, Word{id}, Scalar::one(spec));
  }
  static NcPoly constant(FieldSpec spec, Scalar c) {
    return NcPoly(spec, Word{}, std::move(c));
  }

  FieldSpec spec() const { return spec_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t degree() const;  // 0 for the zero polynomial

  /// Largest term in deglex order; polynomial must be nonzero.
  const std::pair<const Word, Scalar> &leading() const;
  Scalar coefficient(const Word &w) const;

  void add_term(const Word &w, const Scalar &c);

  NcPoly operator-() const;
  friend NcPoly operator+(const NcPoly &a, const NcPoly &b);
  friend NcPoly operator-(const NcPoly &a, const NcPoly &b);
  friend NcPoly operator*(const NcPoly &a, const NcPoly &b);
  NcPoly scaled(const Scalar &c) const;

  friend bool operator==(const NcPoly &a, const NcPoly &b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const NcPoly &a, const NcPoly &b) {
    return !(a == b);
  }
  /// Deterministic total order (for canonical containers/reports).
  friend bool operator<(const NcPoly &a, const NcPoly &b);

  std::string render(const Alphabet &alphabet) const;

private:
  FieldSpec spec_;
  TermMap terms_;
};

inline NcPoly operator*(const Scalar &c, const NcPoly &p) {
  return p.scaled(c);
}

}  // namespace hopfcert

#endif

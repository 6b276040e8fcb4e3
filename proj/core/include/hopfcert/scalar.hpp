#ifndef HOPFCERT_SCALAR_HPP
#define HOPFCERT_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfcert {

using Rational = boost::multiprecision::mpq_rational;

/// Error for all invalid field/scalar operations (mismatched fields,
/// division by zero, malformed input text).
struct field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial over Q, coefficients low degree first.
/// Only the handful of helpers the cyclotomic arithmetic needs.
using QPoly = std::vector<Rational>;

QPoly qpoly_trim(QPoly p);
QPoly qpoly_mul(const QPoly &a, const QPoly &b);
QPoly qpoly_sub(const QPoly &a, const QPoly &b);
// Euclidean division a = q*b + r, returns {q, r}; b nonzero.
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly &a, const QPoly &b);

/// The m-th cyclotomic polynomial, monic with integer coefficients.
/// m = 1 gives x - 1.
QPoly cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

/// Ground field: Q (conductor 1) or the cyclotomic extension Q(zeta_m).
/// Conductors 1 and 2 describe the same field Q; they compare equal.
struct FieldSpec {
  unsigned conductor = 1;

  FieldSpec() = default;
  explicit FieldSpec(unsigned m) : conductor(m) {
    if (m == 0) throw field_error("field conductor must be positive");
  }

  static FieldSpec rationals() { return FieldSpec(1); }
  static FieldSpec cyclotomic(unsigned m) { return FieldSpec(m); }

  bool is_rational() const { return conductor <= 2; }
  unsigned degree() const { return euler_phi(conductor); }

  friend bool operator==(const FieldSpec &a, const FieldSpec &b) {
    unsigned ca = a.conductor <= 2 ? 1 : a.conductor;
    unsigned cb = b.conductor <= 2 ? 1 : b.conductor;
    return ca == cb;
  }
  friend bool operator!=(const FieldSpec &a, const FieldSpec &b) {
    return !(a == b);
  }
};

/// Exact element of Q(zeta_m), stored in the power basis modulo Phi_m.
/// The representation is the reduced residue, so equality is
/// coefficientwise. Values are immutable in spirit: every operation
/// returns a fresh Scalar.
class Scalar {
public:
  Scalar() = default;  // zero over Q
  explicit Scalar(FieldSpec spec) : spec_(spec), coeffs_(spec.degree()) {}
  Scalar(FieldSpec spec, Rational value) : Scalar(spec) {
    coeffs_[0] = std::move(value);
  }
  Scalar(FieldSpec spec, QPoly coeffs);

  static Scalar zero(FieldSpec spec) { return Scalar(spec); }
  static Scalar one(FieldSpec spec) { return Scalar(spec, Rational(1)); }
  /// zeta_m for the spec's conductor (1 over Q, -1 for conductor 2).
  static Scalar zeta(FieldSpec spec);

  const FieldSpec &spec() const { return spec_; }
  const QPoly &coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;
  /// The rational part; throws if the element is not rational.
  Rational rational_value() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar &a, const Scalar &b);
  friend Scalar operator-(const Scalar &a, const Scalar &b);
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  friend Scalar operator/(const Scalar &a, const Scalar &b);
  Scalar inverse() const;
  Scalar pow(long e) const;

  friend bool operator==(const Scalar &a, const Scalar &b);
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }
  /// Total order for deterministic containers; not a field order.
  friend bool operator<(const Scalar &a, const Scalar &b);

  /// Text form: "3/4" over Q, "(a0) + (a1)*z + (a2)*z^2" otherwise.
  std::string render() const;
  static Scalar parse(FieldSpec spec, const std::string &text);

private:
  FieldSpec spec_;
  QPoly coeffs_{Rational(0)};

  static void check_same(const Scalar &a, const Scalar &b);
};

/// Root of unity of exact multiplicative order `order` inside `spec`.
/// Requires order | conductor (over Q only orders 1 and 2 exist).
Scalar root_of_unity(FieldSpec spec, unsigned order);

/// Multiplicative order of a, or 0 if a is not a root of unity of
/// order <= bound.
unsigned multiplicative_order(const Scalar &a, unsigned bound = 512);

}  // namespace hopfcert

#endif

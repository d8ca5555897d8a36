#pragma once

#include <string>

#include "chazy/algebraic/radical_field.hpp"

namespace chazy::algebraic {

/// Closed rational interval [lo, hi].
struct RationalInterval {
  BigRational lo;
  BigRational hi;

  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
  BigRational width() const { return hi - lo; }
};

struct FloatApprox {
  double value = 0.0;
  double half_width = 0.0;
};

/// rep(gamma) for a rational polynomial rep of degree < N.
///
/// The value's enclosure is derived on demand from the field's cached
/// enclosure of gamma, so the object itself is immutable and thread-safe.
class AlgebraicNumber {
 public:
  explicit AlgebraicNumber(FieldPtr field);
  AlgebraicNumber(FieldPtr field, const BigRational& c);

  /// Reduces rep modulo gamma^N - r.
  static AlgebraicNumber reduce(const RatPoly& rep, FieldPtr field);
  static AlgebraicNumber generator(FieldPtr field);
  /// c * gamma^e; e may be negative.
  static AlgebraicNumber gamma_power(FieldPtr field, const BigRational& c, long e);

  const FieldPtr& field() const { return field_; }
  const RatPoly& rep() const { return rep_; }

  /// True when the representation is a rational constant. A non-constant rep
  /// can still be rational if x^N - r is reducible.
  bool has_rational_rep() const { return rep_.degree() <= 0; }
  BigRational rational_part() const { return rep_.coeff(0); }

  AlgebraicNumber& operator+=(const AlgebraicNumber& o);
  AlgebraicNumber& operator-=(const AlgebraicNumber& o);
  AlgebraicNumber& operator*=(const AlgebraicNumber& o);
  AlgebraicNumber& operator/=(const AlgebraicNumber& o);
  AlgebraicNumber& operator*=(const BigRational& c);

  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) { return a /= b; }
  friend AlgebraicNumber operator*(const BigRational& c, AlgebraicNumber a) { return a *= c; }
  friend AlgebraicNumber operator-(const AlgebraicNumber& a);

  /// Throws std::domain_error if the value is zero.
  AlgebraicNumber inverse() const;

  std::string to_string(const char* var = "g") const;

 private:
  AlgebraicNumber(FieldPtr field, RatPoly rep, bool already_reduced);
  void check_field(const AlgebraicNumber& o) const;

  FieldPtr field_;
  RatPoly rep_;
};

AlgebraicNumber pow(const AlgebraicNumber& a, long e);

/// Exact zero test: gcd(rep, x^N - r) must have a positive real root.
bool is_zero(const AlgebraicNumber& a);

/// Exact sign of the real value.
int sign(const AlgebraicNumber& a);

/// sign(a - b)
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Rational interval containing the value, of width at most 2^-bits.
RationalInterval enclosure(const AlgebraicNumber& a, unsigned long bits);

/// Midpoint and half-width of an enclosure of width at most 2^-bits. The
/// half-width is the exact interval bound; the double conversion of the
/// midpoint adds its own rounding on top.
FloatApprox to_float(const AlgebraicNumber& a, unsigned long bits = 64);

/// p(x) for a rational polynomial p and x in Q(gamma).
AlgebraicNumber evaluate(const RatPoly& p, const AlgebraicNumber& x);

}  // namespace chazy::algebraic

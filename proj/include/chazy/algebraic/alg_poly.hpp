#pragma once

#include <string>
#include <vector>

#include "chazy/algebraic/algebraic_number.hpp"

namespace chazy::algebraic {

/// Dense univariate polynomial with coefficients in Q(gamma). Trailing
/// coefficients are trimmed with the exact zero test, so lc() is a nonzero
/// real number unless the polynomial is zero.
class AlgPoly {
 public:
  explicit AlgPoly(FieldPtr field);
  AlgPoly(FieldPtr field, std::vector<AlgebraicNumber> coeffs);
  /// Embeds a rational polynomial.
  AlgPoly(FieldPtr field, const RatPoly& p);

  /// Sum of c_i * gamma^(e_i) * u^(k_i).
  struct Term {
    BigRational c;
    long gamma_exp;
    int u_exp;
  };
  static AlgPoly from_terms(FieldPtr field, const std::vector<Term>& terms);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<AlgebraicNumber>& coeffs() const { return coeffs_; }
  AlgebraicNumber coeff(int i) const;
  AlgebraicNumber lc() const;

  AlgPoly& operator+=(const AlgPoly& o);
  AlgPoly& operator-=(const AlgPoly& o);
  AlgPoly& operator*=(const AlgebraicNumber& c);
  friend AlgPoly operator+(AlgPoly a, const AlgPoly& b) { return a += b; }
  friend AlgPoly operator-(AlgPoly a, const AlgPoly& b) { return a -= b; }
  friend AlgPoly operator*(const AlgPoly& a, const AlgPoly& b);
  friend AlgPoly operator-(const AlgPoly& a);

  std::string to_string(const char* var = "u") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<AlgebraicNumber> coeffs_;
};

AlgPoly derivative(const AlgPoly& p);

/// Euclidean division over Q(gamma). Throws std::domain_error on b = 0.
std::pair<AlgPoly, AlgPoly> divmod(const AlgPoly& a, const AlgPoly& b);

AlgebraicNumber eval(const AlgPoly& p, const AlgebraicNumber& x);
AlgebraicNumber eval(const AlgPoly& p, const BigRational& x);

/// Sylvester resultant with the same convention as the rational one.
AlgebraicNumber resultant(const AlgPoly& a, const AlgPoly& b);

/// Monic gcd over Q(gamma).
AlgPoly gcd(const AlgPoly& a, const AlgPoly& b);

}  // namespace chazy::algebraic

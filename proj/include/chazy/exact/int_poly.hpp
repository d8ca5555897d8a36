#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "chazy/exact/big_rational.hpp"

namespace chazy::exact {

/// Dense univariate polynomial over Z. Index = degree; the zero polynomial
/// has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Leading coefficient; zero for the zero polynomial.
  BigInt lc() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }
  const BigInt& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(const char* var = "x") const;

 private:
  friend IntPoly prem(IntPoly a, const IntPoly& b);
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Non-negative gcd of the coefficients (0 for the zero polynomial).
BigInt content(const IntPoly& p);

/// p / content(p); keeps the sign of the leading coefficient.
IntPoly primitive_part(const IntPoly& p);

IntPoly derivative(const IntPoly& p);

IntPoly operator*(const BigInt& c, const IntPoly& p);

/// Exact division of every coefficient by c (c must divide them all).
IntPoly divexact(const IntPoly& p, const BigInt& c);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b. Returns a unchanged
/// when deg a < deg b. b must be nonzero.
IntPoly prem(IntPoly a, const IntPoly& b);

/// Sign of p(num/den) for den > 0, evaluated with integer arithmetic only.
int sign_at(const IntPoly& p, const BigInt& num, const BigInt& den);

inline int sign_at(const IntPoly& p, const BigRational& x) {
  return sign_at(p, x.numerator(), x.denominator());
}

/// Sign of the leading term at +infinity (dir = +1) or -infinity (dir = -1).
int sign_at_infinity(const IntPoly& p, int dir);

/// Sub-resultant gcd over Z, normalized to a positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Sylvester resultant over Z, computed with the sub-resultant algorithm.
BigInt resultant(const IntPoly& a, const IntPoly& b);

}  // namespace chazy::exact

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "chazy/exact/big_rational.hpp"
#include "chazy/exact/int_poly.hpp"

namespace chazy::exact {

/// Dense univariate polynomial with exact rational coefficients. Index =
/// degree. The leading coefficient is nonzero; the zero polynomial has
/// degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRational> coeffs);
  RatPoly(std::initializer_list<BigRational> coeffs);
  explicit RatPoly(const IntPoly& p);

  static RatPoly constant(const BigRational& c);
  /// c * x^k
  static RatPoly monomial(const BigRational& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero beyond the degree.
  BigRational coeff(int i) const;
  BigRational lc() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  /// Number of nonzero coefficients.
  int term_count() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const BigRational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const BigRational& c, RatPoly p) { return p *= c; }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  std::string to_string(const char* var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Exact Horner evaluation.
BigRational poly_eval(const RatPoly& p, const BigRational& x);

RatPoly derivative(const RatPoly& p);

/// Divides by the leading coefficient; the zero polynomial maps to itself.
RatPoly monic(const RatPoly& p);

/// Euclidean division a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// a / b where b is known to divide a; throws std::logic_error otherwise.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// Monic gcd g together with Bezout cofactors: s*a + t*b = g.
struct ExtendedGcd {
  RatPoly gcd;
  RatPoly s;
  RatPoly t;
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

/// Sylvester resultant, res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the
/// roots alpha_i of f. Throws std::domain_error on a zero argument.
BigRational poly_resultant(const RatPoly& a, const RatPoly& b);

/// p / gcd(p, p'), monic. Throws std::domain_error on the zero polynomial.
RatPoly square_free_part(const RatPoly& p);

/// Yun decomposition: p = lc(p) * prod_k factors[k-1]^k with every factor
/// monic, square-free and pairwise coprime. Trailing constant factors are
/// dropped. Throws std::domain_error on the zero polynomial.
std::vector<RatPoly> square_free_decomposition(const RatPoly& p);

/// Positive rational multiple of p with coprime integer coefficients.
IntPoly to_primitive_int(const RatPoly& p);

/// p(c * x)
RatPoly scale_argument(const RatPoly& p, const BigRational& c);

/// Number of sign changes in the coefficient sequence (zeros skipped).
int coefficient_sign_changes(const RatPoly& p);

}  // namespace chazy::exact

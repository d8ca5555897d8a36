#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace chazy::exact {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP's mpq_t.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral I>
  BigRational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  BigRational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)

  /// num/den; throws std::domain_error when den == 0.
  BigRational(const BigInt& num, const BigInt& den);

  explicit BigRational(const mpq_class& value);

  /// Accepts "a", "-a", "a/b".
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(); }

  const mpq_class& raw() const { return value_; }

  BigRational abs() const;
  /// Throws std::domain_error on zero.
  BigRational inverse() const;

  BigRational& operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
  }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) {
    BigRational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// base^exp for a non-negative exponent; pow(0, 0) == 1.
BigRational pow(const BigRational& base, unsigned long exp);

/// base^exp for any integer exponent; throws std::domain_error for 0^negative.
BigRational ipow(const BigRational& base, long exp);

BigInt ipow(const BigInt& base, unsigned long exp);

}  // namespace chazy::exact

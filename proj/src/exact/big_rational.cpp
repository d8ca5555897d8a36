#include "chazy/exact/big_rational.hpp"

#include <stdexcept>

namespace chazy::exact {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational::BigRational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s, 10));
    return BigRational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
  }
}

BigRational BigRational::abs() const { return sign() < 0 ? -*this : *this; }

BigRational BigRational::inverse() const {
  if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
  return BigRational(value_.get_den(), value_.get_num());
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigRational pow(const BigRational& base, unsigned long exp) {
  return BigRational(ipow(base.numerator(), exp), ipow(base.denominator(), exp));
}

BigRational ipow(const BigRational& base, long exp) {
  if (exp >= 0) return pow(base, static_cast<unsigned long>(exp));
  return pow(base.inverse(), static_cast<unsigned long>(-exp));
}

}  // namespace chazy::exact

#include "chazy/algebraic/radical_field.hpp"

#include <stdexcept>

namespace chazy::algebraic {

BigRational DyadicInterval::lower() const {
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return BigRational(lo, den);
}

BigRational DyadicInterval::upper() const {
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return BigRational(BigInt(lo + 1), den);
}

RadicalField::RadicalField(int index, BigRational radicand)
    : index_(index), radicand_(std::move(radicand)) {
  if (index_ < 2 || index_ % 2 != 0) {
    throw std::invalid_argument("RadicalField: index must be an even integer >= 2");
  }
  if (radicand_.sign() <= 0) throw std::invalid_argument("RadicalField: radicand must be > 0");

  // integer part of gamma by bisection on [0, ceil(r) + 1]
  BigInt lo = 0;
  BigInt hi = radicand_.numerator() / radicand_.denominator() + 2;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (below_or_at(mid, 0)) lo = mid;
    else hi = mid;
  }
  cache_lo_ = lo;
  cache_bits_ = 0;
}

std::shared_ptr<const RadicalField> RadicalField::make(int index, BigRational radicand) {
  return std::make_shared<const RadicalField>(index, std::move(radicand));
}

std::shared_ptr<const RadicalField> RadicalField::chazy(int q) {
  if (q < 1) throw std::invalid_argument("RadicalField::chazy: q must be >= 1");
  return make(2 * (q + 1), BigRational(2L * (q + 1) * (q + 1)));
}

RatPoly RadicalField::defining_polynomial() const {
  return RatPoly::monomial(1, index_) - RatPoly::constant(radicand_);
}

bool RadicalField::below_or_at(const BigInt& lo, unsigned long bits) const {
  BigInt lhs = exact::ipow(lo, static_cast<unsigned long>(index_)) * radicand_.denominator();
  BigInt rhs = radicand_.numerator();
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), bits * static_cast<unsigned long>(index_));
  return lhs <= rhs;
}

DyadicInterval RadicalField::generator_enclosure(unsigned long bits) const {
  std::lock_guard lock(mutex_);
  while (cache_bits_ < bits) {
    BigInt candidate = 2 * cache_lo_ + 1;
    ++cache_bits_;
    if (below_or_at(candidate, cache_bits_)) cache_lo_ = std::move(candidate);
    else cache_lo_ = 2 * cache_lo_;
  }
  BigInt lo;
  mpz_fdiv_q_2exp(lo.get_mpz_t(), cache_lo_.get_mpz_t(), cache_bits_ - bits);
  return {lo, bits};
}

}  // namespace chazy::algebraic

#pragma once

#include <memory>
#include <mutex>

#include "chazy/exact/big_rational.hpp"
#include "chazy/exact/rat_poly.hpp"

namespace chazy::algebraic {

using exact::BigInt;
using exact::BigRational;
using exact::RatPoly;

/// The dyadic interval [lo, lo + 1] / 2^bits.
struct DyadicInterval {
  BigInt lo;
  unsigned long bits = 0;

  BigRational lower() const;
  BigRational upper() const;
};

/// Q(gamma) with gamma the positive real root of x^N - r, N even.
///
/// The field object owns a lazily refined enclosure of gamma, shared by every
/// element built on it. Refinement is mutex-protected, so a field may be
/// shared across threads.
class RadicalField {
 public:
  /// Throws std::invalid_argument unless index >= 2 is even and radicand > 0.
  RadicalField(int index, BigRational radicand);

  /// N = 2(q+1), r = 2(q+1)^2, i.e. gamma = 2^(1/(2(q+1))) (q+1)^(1/(q+1)).
  static std::shared_ptr<const RadicalField> chazy(int q);
  static std::shared_ptr<const RadicalField> make(int index, BigRational radicand);

  int index() const { return index_; }
  const BigRational& radicand() const { return radicand_; }

  /// x^N - r
  RatPoly defining_polynomial() const;

  /// floor(gamma * 2^bits) / 2^bits and its successor. Deterministic: the
  /// result depends only on bits, not on how far the cache has been refined.
  DyadicInterval generator_enclosure(unsigned long bits) const;

  bool same_as(const RadicalField& o) const {
    return this == &o || (index_ == o.index_ && radicand_ == o.radicand_);
  }

 private:
  // lo^N <= r, tested as lo^N * den(r) <= num(r) * 2^(N*bits)
  bool below_or_at(const BigInt& lo, unsigned long bits) const;

  int index_;
  BigRational radicand_;
  mutable std::mutex mutex_;
  mutable BigInt cache_lo_;
  mutable unsigned long cache_bits_ = 0;
};

using FieldPtr = std::shared_ptr<const RadicalField>;

}  // namespace chazy::algebraic

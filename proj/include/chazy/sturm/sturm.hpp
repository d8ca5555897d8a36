#pragma once

#include <string>
#include <variant>
#include <vector>

#include "chazy/algebraic/alg_poly.hpp"
#include "chazy/algebraic/algebraic_number.hpp"
#include "chazy/exact/int_poly.hpp"
#include "chazy/exact/rat_poly.hpp"

namespace chazy::sturm {

using algebraic::AlgebraicNumber;
using algebraic::AlgPoly;
using exact::BigRational;
using exact::IntPoly;
using exact::RatPoly;

struct Infinity {
  int dir = 1;  // +1 or -1
  friend bool operator==(const Infinity&, const Infinity&) = default;
};

/// An interval endpoint: rational, element of Q(gamma), or +-infinity.
using Point = std::variant<BigRational, AlgebraicNumber, Infinity>;

inline Point pos_inf() { return Infinity{1}; }
inline Point neg_inf() { return Infinity{-1}; }

/// sign(a - b), exact.
int compare(const Point& a, const Point& b);
std::string to_string(const Point& p);

/// Exact sign of p at x; at infinity the sign of the leading term.
int sign_at(const IntPoly& p, const Point& x);
int sign_at(const RatPoly& p, const Point& x);
int sign_at(const AlgPoly& p, const Point& x);

/// Sturm sequence of a square-free rational polynomial. Elements are stored
/// as primitive integer polynomials, each a positive multiple of the
/// textbook -rem(q_{i-2}, q_{i-1}).
class SturmChain {
 public:
  /// Throws std::domain_error on the zero polynomial. A non-square-free input
  /// is replaced by its square-free part; squarefree_reduced() records it.
  static SturmChain build(const RatPoly& p);

  const IntPoly& base() const { return seq_.front(); }
  const std::vector<IntPoly>& sequence() const { return seq_; }
  int length() const { return static_cast<int>(seq_.size()); }
  bool squarefree_reduced() const { return reduced_; }

  int sign_variations_at(const Point& x) const;

 private:
  std::vector<IntPoly> seq_;
  bool reduced_ = false;
};

/// Sturm sequence over Q(gamma); each element is scaled to a leading
/// coefficient of +-1.
class AlgSturmChain {
 public:
  static AlgSturmChain build(const AlgPoly& p);

  const AlgPoly& base() const { return seq_.front(); }
  const std::vector<AlgPoly>& sequence() const { return seq_; }
  int length() const { return static_cast<int>(seq_.size()); }
  bool squarefree_reduced() const { return reduced_; }

  int sign_variations_at(const Point& x) const;

 private:
  std::vector<AlgPoly> seq_;
  bool reduced_ = false;
};

struct RootCount {
  int count = 0;
  Point a;
  Point b;
};

/// Distinct roots in (a, b]. Throws std::invalid_argument unless a < b.
RootCount count_roots(const SturmChain& chain, const Point& a, const Point& b);
RootCount count_roots(const AlgSturmChain& chain, const Point& a, const Point& b);

enum class Interval { half_open, open };

/// Roots of p counted with multiplicity in (a, b], or in (a, b) when
/// kind == open. Throws std::invalid_argument unless a < b.
int count_roots_with_multiplicity(const RatPoly& p, const Point& a, const Point& b,
                                  Interval kind = Interval::half_open);

/// Exact test p(x) == 0 for a finite point.
bool is_root(const RatPoly& p, const Point& x);

}  // namespace chazy::sturm

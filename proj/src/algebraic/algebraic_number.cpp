#include "chazy/algebraic/algebraic_number.hpp"

#include <stdexcept>

#include "chazy/sturm/sturm.hpp"

namespace chazy::algebraic {

namespace {

BigRational pow_r(const FieldPtr& f, long times) {
  return exact::ipow(f->radicand(), times);
}

RatPoly reduce_rep(const RatPoly& rep, const RadicalField& f) {
  const int n = f.index();
  if (rep.degree() < n) return rep;
  std::vector<BigRational> c = rep.coeffs();
  for (int k = rep.degree(); k >= n; --k) {
    auto& ck = c[static_cast<std::size_t>(k)];
    if (ck.is_zero()) continue;
    c[static_cast<std::size_t>(k - n)] += ck * f.radicand();
    ck = 0;
  }
  c.resize(static_cast<std::size_t>(n));
  return RatPoly(std::move(c));
}

// rep = A / D with A integral and D > 0.
struct ScaledRep {
  std::vector<BigInt> a;
  BigInt d = 1;
};

ScaledRep scaled(const RatPoly& rep) {
  ScaledRep s;
  for (const auto& c : rep.coeffs()) {
    const BigInt den = c.denominator();
    mpz_lcm(s.d.get_mpz_t(), s.d.get_mpz_t(), den.get_mpz_t());
  }
  s.a.reserve(rep.coeffs().size());
  for (const auto& c : rep.coeffs()) s.a.push_back(c.numerator() * (s.d / c.denominator()));
  return s;
}

// A(gamma) lies in [S - B, S + B] / 2^(K n), with gamma in [L, L+1] / 2^k and
// K = k + 1. S is A at the midpoint, B a mean-value bound on the error.
struct Bracket {
  BigInt s;
  BigInt b;
  unsigned long shift = 0;  // K * n
};

Bracket bracket(const ScaledRep& sr, const DyadicInterval& g) {
  const auto& a = sr.a;
  const int n = static_cast<int>(a.size()) - 1;
  const unsigned long kk = g.bits + 1;
  const BigInt m = 2 * g.lo + 1;
  const BigInt hi = 2 * g.lo + 2;
  Bracket out;
  out.shift = kk * static_cast<unsigned long>(n);

  BigInt acc = a[static_cast<std::size_t>(n)];
  BigInt term;
  for (int j = n - 1; j >= 0; --j) {
    acc *= m;
    mpz_mul_2exp(term.get_mpz_t(), a[static_cast<std::size_t>(j)].get_mpz_t(),
                 kk * static_cast<unsigned long>(n - j));
    acc += term;
  }
  out.s = acc;

  // sum_{j>=1} j |a_j| hi^(j-1) 2^(K (n-j))
  BigInt bnd = 0;
  for (int j = n; j >= 1; --j) {
    bnd *= hi;
    BigInt t = abs(a[static_cast<std::size_t>(j)]) * j;
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), kk * static_cast<unsigned long>(n - j));
    bnd += t;
  }
  out.b = bnd;
  return out;
}

int sgn(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

}  // namespace

AlgebraicNumber::AlgebraicNumber(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("AlgebraicNumber: null field");
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, const BigRational& c)
    : AlgebraicNumber(std::move(field), RatPoly::constant(c), true) {}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, RatPoly rep, bool already_reduced)
    : field_(std::move(field)), rep_(std::move(rep)) {
  if (!field_) throw std::invalid_argument("AlgebraicNumber: null field");
  if (!already_reduced) rep_ = reduce_rep(rep_, *field_);
}

AlgebraicNumber AlgebraicNumber::reduce(const RatPoly& rep, FieldPtr field) {
  return AlgebraicNumber(std::move(field), rep, false);
}

AlgebraicNumber AlgebraicNumber::generator(FieldPtr field) {
  return AlgebraicNumber(std::move(field), RatPoly::monomial(1, 1), false);
}

AlgebraicNumber AlgebraicNumber::gamma_power(FieldPtr field, const BigRational& c, long e) {
  const long n = field->index();
  long q = e / n;
  long rem = e % n;
  if (rem < 0) {
    rem += n;
    --q;
  }
  BigRational coef = c * pow_r(field, q);
  return AlgebraicNumber(field, RatPoly::monomial(coef, static_cast<int>(rem)), true);
}

void AlgebraicNumber::check_field(const AlgebraicNumber& o) const {
  if (!field_->same_as(*o.field_)) {
    throw std::invalid_argument("AlgebraicNumber: operands belong to different fields");
  }
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
  check_field(o);
  rep_ += o.rep_;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
  check_field(o);
  rep_ -= o.rep_;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
  check_field(o);
  if (o.has_rational_rep()) {
    rep_ *= o.rational_part();
  } else if (has_rational_rep()) {
    const BigRational c = rational_part();
    rep_ = o.rep_;
    rep_ *= c;
  } else {
    rep_ = reduce_rep(rep_ * o.rep_, *field_);
  }
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const BigRational& c) {
  rep_ *= c;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator/=(const AlgebraicNumber& o) {
  check_field(o);
  return *this *= o.inverse();
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
  return AlgebraicNumber(a.field_, -a.rep_, true);
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (rep_.is_zero()) throw std::domain_error("AlgebraicNumber::inverse: zero");
  if (has_rational_rep()) return AlgebraicNumber(field_, rational_part().inverse());
  const RatPoly f = field_->defining_polynomial();
  auto eg = exact::extended_gcd(rep_, f);
  if (eg.gcd.degree() == 0) return AlgebraicNumber(field_, eg.s, false);
  // x^N - r is reducible and shares the factor g with rep. gamma is a root of
  // the cofactor m when the value is nonzero, and m is coprime to rep there.
  if (is_zero(*this)) throw std::domain_error("AlgebraicNumber::inverse: zero");
  const RatPoly m = exact::exact_div(f, eg.gcd);
  auto eg2 = exact::extended_gcd(rep_, m);
  if (eg2.gcd.degree() != 0) throw std::logic_error("AlgebraicNumber::inverse: cofactor not coprime");
  return AlgebraicNumber(field_, eg2.s, false);
}

std::string AlgebraicNumber::to_string(const char* var) const { return rep_.to_string(var); }

AlgebraicNumber pow(const AlgebraicNumber& a, long e) {
  if (e < 0) return pow(a.inverse(), -e);
  if (a.has_rational_rep()) {
    return AlgebraicNumber(a.field(), exact::pow(a.rational_part(), static_cast<unsigned long>(e)));
  }
  // single term c * gamma^k
  if (a.rep().term_count() == 1) {
    const int k = a.rep().degree();
    return AlgebraicNumber::gamma_power(a.field(), exact::pow(a.rep().lc(), static_cast<unsigned long>(e)),
                                        static_cast<long>(k) * e);
  }
  AlgebraicNumber result(a.field(), BigRational(1));
  AlgebraicNumber base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool is_zero(const AlgebraicNumber& a) {
  const RatPoly& rep = a.rep();
  if (rep.is_zero()) return true;
  if (rep.degree() == 0) return false;
  if (rep.term_count() == 1) return false;  // c * gamma^k with gamma > 0
  const RatPoly g = exact::poly_gcd(rep, a.field()->defining_polynomial());
  if (g.degree() <= 0) return false;
  // the real roots of x^N - r are +-gamma; gamma is a root of g iff g has a
  // positive root
  const auto chain = sturm::SturmChain::build(g);
  return sturm::count_roots(chain, sturm::Point(BigRational(0)), sturm::pos_inf()).count > 0;
}

int sign(const AlgebraicNumber& a) {
  const RatPoly& rep = a.rep();
  if (rep.is_zero()) return 0;
  if (rep.degree() == 0 || rep.term_count() == 1) return rep.lc().sign();
  const ScaledRep sr = scaled(rep);
  bool zero_checked = false;
  for (unsigned long bits = 64;; bits *= 2) {
    const Bracket br = bracket(sr, a.field()->generator_enclosure(bits));
    if (abs(br.s) > br.b) return sgn(br.s);
    if (!zero_checked && bits >= 256) {
      if (is_zero(a)) return 0;
      zero_checked = true;
    }
  }
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) { return sign(a - b); }

RationalInterval enclosure(const AlgebraicNumber& a, unsigned long bits) {
  const RatPoly& rep = a.rep();
  if (rep.degree() <= 0) {
    const BigRational c = rep.coeff(0);
    return {c, c};
  }
  const ScaledRep sr = scaled(rep);
  BigInt target = 1;
  for (unsigned long k = std::max(64UL, bits + 8);; k *= 2) {
    const Bracket br = bracket(sr, a.field()->generator_enclosure(k));
    // width 2B / (D 2^shift) <= 2^-bits  <=>  B 2^(bits+1) <= D 2^shift
    BigInt lhs = br.b;
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), bits + 1);
    BigInt rhs = sr.d;
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), br.shift);
    if (lhs <= rhs) {
      BigInt den = sr.d;
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), br.shift);
      return {BigRational(BigInt(br.s - br.b), den), BigRational(BigInt(br.s + br.b), den)};
    }
  }
}

FloatApprox to_float(const AlgebraicNumber& a, unsigned long bits) {
  if (bits < 1) throw std::invalid_argument("to_float: precision must be >= 1 bit");
  const RationalInterval iv = enclosure(a, bits);
  const BigRational mid = (iv.lo + iv.hi) * BigRational(1, 2);
  const BigRational half = (iv.hi - iv.lo) * BigRational(1, 2);
  return {mid.to_double(), half.to_double()};
}

AlgebraicNumber evaluate(const RatPoly& p, const AlgebraicNumber& x) {
  const FieldPtr& f = x.field();
  if (p.is_zero()) return AlgebraicNumber(f);
  if (x.has_rational_rep()) return AlgebraicNumber(f, exact::poly_eval(p, x.rational_part()));
  if (x.rep().term_count() == 1) {
    // x = c gamma^e: sum_j p_j c^j gamma^(e j), placed directly by residue
    const BigRational c = x.rep().lc();
    const long e = x.rep().degree();
    const long n = f->index();
    std::vector<BigRational> out(static_cast<std::size_t>(n));
    BigRational cj = 1;
    for (int j = 0; j <= p.degree(); ++j) {
      const auto& pj = p.coeffs()[static_cast<std::size_t>(j)];
      if (!pj.is_zero()) {
        const long ej = e * j;
        out[static_cast<std::size_t>(ej % n)] += pj * cj * exact::ipow(f->radicand(), ej / n);
      }
      cj *= c;
    }
    return AlgebraicNumber::reduce(RatPoly(std::move(out)), f);
  }
  AlgebraicNumber acc(f);
  for (int j = p.degree(); j >= 0; --j) {
    acc *= x;
    acc += AlgebraicNumber(f, p.coeffs()[static_cast<std::size_t>(j)]);
  }
  return acc;
}

}  // namespace chazy::algebraic

#include "chazy/exact/rat_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chazy::exact {

RatPoly::RatPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

RatPoly RatPoly::constant(const BigRational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const BigRational& c, int k) {
  if (k < 0) throw std::invalid_argument("RatPoly::monomial: negative degree");
  std::vector<BigRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

int RatPoly::term_count() const {
  return static_cast<int>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return !c.is_zero(); }));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const BigRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPoly operator-(const RatPoly& a) {
  RatPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string(const char* var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const BigRational a = c.abs();
    const bool unit = a == BigRational(1);
    if (!unit || i == 0) os << a.to_string();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

BigRational poly_eval(const RatPoly& p, const BigRational& x) {
  BigRational acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc *= x;
    acc += p.coeffs()[static_cast<std::size_t>(i)];
  }
  return acc;
}

RatPoly derivative(const RatPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<BigRational> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = p.coeffs()[static_cast<std::size_t>(i)] * BigRational(i);
  }
  return RatPoly(std::move(out));
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p.lc().inverse() * p;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<BigRational> rem = a.coeffs();
  std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const BigRational inv_lc = b.lc().inverse();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const BigRational c = rem[static_cast<std::size_t>(k)] * inv_lc;
    quo[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

IntPoly to_primitive_int(const RatPoly& p) {
  if (p.is_zero()) return {};
  BigInt den = 1;
  for (const auto& c : p.coeffs()) {
    const BigInt d = c.denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> ints(p.coeffs().size());
  for (std::size_t i = 0; i < ints.size(); ++i) {
    const auto& c = p.coeffs()[i];
    ints[i] = c.numerator() * (den / c.denominator());
  }
  return primitive_part(IntPoly(std::move(ints)));
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  return monic(RatPoly(gcd(to_primitive_int(a), to_primitive_int(b))));
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  const BigRational inv = r0.lc().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

BigRational poly_resultant(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("poly_resultant: zero polynomial");
  const IntPoly ia = to_primitive_int(a);
  const IntPoly ib = to_primitive_int(b);
  // a = sa * ia, b = sb * ib with positive rational scales
  const BigRational sa = a.lc() / BigRational(ia.lc());
  const BigRational sb = b.lc() / BigRational(ib.lc());
  return pow(sa, static_cast<unsigned long>(b.degree())) *
         pow(sb, static_cast<unsigned long>(a.degree())) * BigRational(resultant(ia, ib));
}

RatPoly square_free_part(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("square_free_part: zero polynomial");
  if (p.degree() == 0) return RatPoly::constant(1);
  return monic(exact_div(p, poly_gcd(p, derivative(p))));
}

std::vector<RatPoly> square_free_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("square_free_decomposition: zero polynomial");
  std::vector<RatPoly> factors;
  if (p.degree() == 0) return factors;
  const RatPoly dp = derivative(p);
  const RatPoly a0 = poly_gcd(p, dp);
  RatPoly b = monic(exact_div(p, a0));
  RatPoly c = exact_div(dp, a0) * RatPoly::constant(p.lc().inverse());
  // c is now (p'/a0) scaled consistently with the monic b
  RatPoly d = c - derivative(b);
  while (b.degree() > 0) {
    RatPoly a = poly_gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
    factors.push_back(std::move(a));
  }
  while (!factors.empty() && factors.back().degree() <= 0) factors.pop_back();
  return factors;
}

RatPoly scale_argument(const RatPoly& p, const BigRational& c) {
  std::vector<BigRational> out = p.coeffs();
  BigRational f = 1;
  for (auto& x : out) {
    x *= f;
    f *= c;
  }
  return RatPoly(std::move(out));
}

int coefficient_sign_changes(const RatPoly& p) {
  int changes = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace chazy::exact

#include "chazy/exact/int_poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace chazy::exact {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPoly::to_string(const char* var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    BigInt a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly divexact(const IntPoly& p, const BigInt& c) {
  if (c == 1) return p;
  std::vector<BigInt> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  return divexact(p, content(p));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = p[i] * i;
  return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& c, const IntPoly& p) {
  std::vector<BigInt> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs()[i];
  return IntPoly(std::move(out));
}

IntPoly prem(IntPoly a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("prem: zero divisor");
  const int db = b.degree();
  if (a.degree() < db) return a;
  const BigInt& lb = b.coeffs_.back();
  int e = a.degree() - db + 1;
  auto& r = a.coeffs_;
  BigInt t;
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    const BigInt lead = r.back();
    r.pop_back();
    if (lb != 1) {
      for (auto& c : r) c *= lb;
    }
    const int shift = dr - db;
    for (int i = 0; i < db; ++i) {
      t = lead * b.coeffs_[static_cast<std::size_t>(i)];
      r[static_cast<std::size_t>(shift + i)] -= t;
    }
    --e;
    a.trim();
  }
  if (e > 0 && lb != 1) {
    const BigInt m = ipow(lb, static_cast<unsigned long>(e));
    for (auto& c : r) c *= m;
  }
  return a;
}

int sign_at(const IntPoly& p, const BigInt& num, const BigInt& den) {
  if (p.is_zero()) return 0;
  BigInt acc = p.lc();
  BigInt dp = den;
  for (int j = p.degree() - 1; j >= 0; --j) {
    acc *= num;
    if (p[j] != 0) acc += p[j] * dp;
    if (j > 0) dp *= den;
  }
  return sgn(acc);
}

int sign_at_infinity(const IntPoly& p, int dir) {
  if (p.is_zero()) return 0;
  const int s = sgn(p.lc());
  return (dir < 0 && p.degree() % 2 == 1) ? -s : s;
}

namespace {

IntPoly normalize_sign(IntPoly p) {
  if (!p.is_zero() && p.lc() < 0) return BigInt(-1) * p;
  return p;
}

// h^(1-delta) * g^delta, exact for delta >= 0 in the sub-resultant recurrences.
BigInt next_h(const BigInt& h, const BigInt& g, int delta) {
  if (delta == 0) return h;
  BigInt num = ipow(g, static_cast<unsigned long>(delta));
  if (delta == 1) return num;
  BigInt den = ipow(h, static_cast<unsigned long>(delta - 1));
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
  const IntPoly* pa = &a_in;
  const IntPoly* pb = &b_in;
  if (pa->degree() < pb->degree()) std::swap(pa, pb);
  if (pb->is_zero()) return normalize_sign(*pa);
  BigInt ca = content(*pa);
  BigInt cb = content(*pb);
  BigInt d;
  mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly A = divexact(*pa, ca);
  IntPoly B = divexact(*pb, cb);
  BigInt g = 1;
  BigInt h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    IntPoly R = prem(A, B);
    if (R.is_zero()) break;
    if (R.degree() == 0) {
      B = IntPoly{1};
      break;
    }
    A = std::move(B);
    B = divexact(R, g * ipow(h, static_cast<unsigned long>(delta)));
    g = A.lc();
    h = next_h(h, g, delta);
  }
  return normalize_sign(d * primitive_part(B));
}

BigInt resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) throw std::domain_error("resultant: zero polynomial");
  IntPoly A = a_in;
  IntPoly B = b_in;
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -1;
  }
  if (B.degree() == 0) return s * ipow(B.lc(), static_cast<unsigned long>(A.degree()));
  const BigInt a = content(A);
  const BigInt b = content(B);
  A = divexact(A, a);
  B = divexact(B, b);
  const BigInt t = ipow(a, static_cast<unsigned long>(B.degree())) *
                   ipow(b, static_cast<unsigned long>(A.degree()));
  BigInt g = 1;
  BigInt h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    IntPoly R = prem(A, B);
    if (R.is_zero()) return 0;
    A = std::move(B);
    B = divexact(R, g * ipow(h, static_cast<unsigned long>(delta)));
    g = A.lc();
    h = next_h(h, g, delta);
    if (B.degree() == 0) {
      const int da = A.degree();
      BigInt num = ipow(B.lc(), static_cast<unsigned long>(da));
      BigInt hh;
      if (da == 0) {
        hh = h * num;
      } else {
        const BigInt den = ipow(h, static_cast<unsigned long>(da - 1));
        mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      }
      return s * t * hh;
    }
  }
}

}  // namespace chazy::exact

#include "chazy/sturm/sturm.hpp"

#include <stdexcept>

namespace chazy::sturm {

namespace {

int sgn(const exact::BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

AlgebraicNumber lift(const BigRational& r, const AlgebraicNumber& like) {
  return AlgebraicNumber(like.field(), r);
}

template <class Poly, class SignFn>
int variations(const std::vector<Poly>& seq, SignFn sign_of) {
  int v = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_of(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Integer primitive remainder sequence with Sturm signs. Returns false if the
// sequence stops on a non-constant element (input not square-free).
bool int_chain(const IntPoly& p0, std::vector<IntPoly>& out) {
  out.clear();
  out.push_back(p0);
  if (p0.degree() <= 0) return true;
  out.push_back(exact::primitive_part(exact::derivative(p0)));
  while (out.back().degree() > 0) {
    const IntPoly& a = out[out.size() - 2];
    const IntPoly& b = out.back();
    IntPoly r = exact::prem(a, b);
    if (r.is_zero()) return false;
    // prem = lc(b)^(delta+1) rem; flip so the result is a positive multiple of -rem
    const int delta = a.degree() - b.degree();
    const int lc_sign = sgn(b.lc());
    const bool lc_pow_negative = lc_sign < 0 && (delta + 1) % 2 == 1;
    r = exact::primitive_part(r);
    if (!lc_pow_negative) r = exact::BigInt(-1) * r;
    out.push_back(std::move(r));
  }
  return true;
}

AlgPoly scale_unit(AlgPoly p) {
  const AlgebraicNumber lc = p.lc();
  const int s = algebraic::sign(lc);
  AlgebraicNumber f = lc.inverse();
  if (s < 0) f = -f;
  return p *= f;
}

bool alg_chain(const AlgPoly& p0, std::vector<AlgPoly>& out) {
  out.clear();
  out.push_back(scale_unit(p0));
  if (p0.degree() <= 0) return true;
  out.push_back(scale_unit(algebraic::derivative(out.front())));
  while (out.back().degree() > 0) {
    AlgPoly r = algebraic::divmod(out[out.size() - 2], out.back()).second;
    if (r.is_zero()) return false;
    out.push_back(scale_unit(-r));
  }
  return true;
}

}  // namespace

int compare(const Point& a, const Point& b) {
  if (const auto* ia = std::get_if<Infinity>(&a)) {
    if (const auto* ib = std::get_if<Infinity>(&b)) return (ia->dir > ib->dir) - (ia->dir < ib->dir);
    return ia->dir;
  }
  if (const auto* ib = std::get_if<Infinity>(&b)) return -ib->dir;
  if (const auto* ra = std::get_if<BigRational>(&a)) {
    if (const auto* rb = std::get_if<BigRational>(&b)) return (*ra - *rb).sign();
    const auto& xb = std::get<AlgebraicNumber>(b);
    return algebraic::sign(lift(*ra, xb) - xb);
  }
  const auto& xa = std::get<AlgebraicNumber>(a);
  if (const auto* rb = std::get_if<BigRational>(&b)) return algebraic::sign(xa - lift(*rb, xa));
  return algebraic::compare(xa, std::get<AlgebraicNumber>(b));
}

std::string to_string(const Point& p) {
  if (const auto* i = std::get_if<Infinity>(&p)) return i->dir > 0 ? "inf" : "-inf";
  if (const auto* r = std::get_if<BigRational>(&p)) return r->to_string();
  return "[" + std::get<AlgebraicNumber>(p).to_string() + "]";
}

int sign_at(const IntPoly& p, const Point& x) {
  if (const auto* i = std::get_if<Infinity>(&x)) return exact::sign_at_infinity(p, i->dir);
  if (const auto* r = std::get_if<BigRational>(&x)) return exact::sign_at(p, *r);
  return algebraic::sign(algebraic::evaluate(RatPoly(p), std::get<AlgebraicNumber>(x)));
}

int sign_at(const RatPoly& p, const Point& x) {
  if (const auto* i = std::get_if<Infinity>(&x)) {
    if (p.is_zero()) return 0;
    const int s = p.lc().sign();
    return (i->dir < 0 && p.degree() % 2 == 1) ? -s : s;
  }
  if (const auto* r = std::get_if<BigRational>(&x)) return exact::poly_eval(p, *r).sign();
  return algebraic::sign(algebraic::evaluate(p, std::get<AlgebraicNumber>(x)));
}

int sign_at(const AlgPoly& p, const Point& x) {
  if (const auto* i = std::get_if<Infinity>(&x)) {
    if (p.is_zero()) return 0;
    const int s = algebraic::sign(p.lc());
    return (i->dir < 0 && p.degree() % 2 == 1) ? -s : s;
  }
  if (const auto* r = std::get_if<BigRational>(&x)) return algebraic::sign(algebraic::eval(p, *r));
  return algebraic::sign(algebraic::eval(p, std::get<AlgebraicNumber>(x)));
}

SturmChain SturmChain::build(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("SturmChain::build: zero polynomial");
  SturmChain c;
  if (!int_chain(exact::to_primitive_int(p), c.seq_)) {
    c.reduced_ = true;
    if (!int_chain(exact::to_primitive_int(exact::square_free_part(p)), c.seq_)) {
      throw std::logic_error("SturmChain::build: square-free part is not square-free");
    }
  }
  return c;
}

int SturmChain::sign_variations_at(const Point& x) const {
  return variations(seq_, [&](const IntPoly& q) { return sign_at(q, x); });
}

AlgSturmChain AlgSturmChain::build(const AlgPoly& p) {
  if (p.is_zero()) throw std::domain_error("AlgSturmChain::build: zero polynomial");
  AlgSturmChain c;
  if (!alg_chain(p, c.seq_)) {
    c.reduced_ = true;
    const AlgPoly g = algebraic::gcd(p, algebraic::derivative(p));
    if (!alg_chain(algebraic::divmod(p, g).first, c.seq_)) {
      throw std::logic_error("AlgSturmChain::build: square-free part is not square-free");
    }
  }
  return c;
}

int AlgSturmChain::sign_variations_at(const Point& x) const {
  return variations(seq_, [&](const AlgPoly& q) { return sign_at(q, x); });
}

namespace {
void require_ordered(const Point& a, const Point& b) {
  if (compare(a, b) >= 0) {
    throw std::invalid_argument("count_roots: need a < b, got (" + to_string(a) + ", " + to_string(b) + "]");
  }
}
}  // namespace

RootCount count_roots(const SturmChain& chain, const Point& a, const Point& b) {
  require_ordered(a, b);
  return {chain.sign_variations_at(a) - chain.sign_variations_at(b), a, b};
}

RootCount count_roots(const AlgSturmChain& chain, const Point& a, const Point& b) {
  require_ordered(a, b);
  return {chain.sign_variations_at(a) - chain.sign_variations_at(b), a, b};
}

bool is_root(const RatPoly& p, const Point& x) {
  if (std::holds_alternative<Infinity>(x)) return false;
  if (const auto* r = std::get_if<BigRational>(&x)) return exact::poly_eval(p, *r).is_zero();
  return algebraic::is_zero(algebraic::evaluate(p, std::get<AlgebraicNumber>(x)));
}

int count_roots_with_multiplicity(const RatPoly& p, const Point& a, const Point& b, Interval kind) {
  require_ordered(a, b);
  if (p.is_zero()) throw std::domain_error("count_roots_with_multiplicity: zero polynomial");
  // a chain that ends in a nonzero constant certifies gcd(p, p') = 1, which
  // is far cheaper than the decomposition for large sparse inputs
  const auto chain = SturmChain::build(p);
  if (!chain.squarefree_reduced()) {
    int n = count_roots(chain, a, b).count;
    if (kind == Interval::open && is_root(p, b)) --n;
    return n;
  }
  const auto factors = exact::square_free_decomposition(p);
  int total = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const RatPoly& s = factors[k];
    if (s.degree() <= 0) continue;
    int n = count_roots(SturmChain::build(s), a, b).count;
    if (kind == Interval::open && is_root(s, b)) --n;
    total += static_cast<int>(k + 1) * n;
  }
  return total;
}

}  // namespace chazy::sturm

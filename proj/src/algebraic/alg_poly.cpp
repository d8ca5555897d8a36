#include "chazy/algebraic/alg_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace chazy::algebraic {

AlgPoly::AlgPoly(FieldPtr field) : field_(std::move(field)) {}

AlgPoly::AlgPoly(FieldPtr field, std::vector<AlgebraicNumber> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

AlgPoly::AlgPoly(FieldPtr field, const RatPoly& p) : field_(std::move(field)) {
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(field_, c);
  trim();
}

AlgPoly AlgPoly::from_terms(FieldPtr field, const std::vector<Term>& terms) {
  int deg = -1;
  for (const auto& t : terms) deg = std::max(deg, t.u_exp);
  std::vector<AlgebraicNumber> c(static_cast<std::size_t>(deg + 1), AlgebraicNumber(field));
  for (const auto& t : terms) {
    if (t.u_exp < 0) throw std::invalid_argument("AlgPoly::from_terms: negative exponent");
    c[static_cast<std::size_t>(t.u_exp)] += AlgebraicNumber::gamma_power(field, t.c, t.gamma_exp);
  }
  return AlgPoly(field, std::move(c));
}

void AlgPoly::trim() {
  while (!coeffs_.empty() && algebraic::is_zero(coeffs_.back())) coeffs_.pop_back();
}

AlgebraicNumber AlgPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return AlgebraicNumber(field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

AlgebraicNumber AlgPoly::lc() const {
  return coeffs_.empty() ? AlgebraicNumber(field_) : coeffs_.back();
}

AlgPoly& AlgPoly::operator+=(const AlgPoly& o) {
  while (coeffs_.size() < o.coeffs_.size()) coeffs_.emplace_back(field_);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

AlgPoly& AlgPoly::operator-=(const AlgPoly& o) {
  while (coeffs_.size() < o.coeffs_.size()) coeffs_.emplace_back(field_);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

AlgPoly& AlgPoly::operator*=(const AlgebraicNumber& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

AlgPoly operator*(const AlgPoly& a, const AlgPoly& b) {
  if (a.is_zero() || b.is_zero()) return AlgPoly(a.field_);
  std::vector<AlgebraicNumber> out(a.coeffs_.size() + b.coeffs_.size() - 1, AlgebraicNumber(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return AlgPoly(a.field_, std::move(out));
}

AlgPoly operator-(const AlgPoly& a) {
  AlgPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string AlgPoly::to_string(const char* var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.rep().is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")";
    if (i > 0) os << "*" << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

AlgPoly derivative(const AlgPoly& p) {
  if (p.degree() < 1) return AlgPoly(p.field());
  std::vector<AlgebraicNumber> out;
  out.reserve(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out.push_back(BigRational(i) * p.coeffs()[static_cast<std::size_t>(i)]);
  return AlgPoly(p.field(), std::move(out));
}

std::pair<AlgPoly, AlgPoly> divmod(const AlgPoly& a, const AlgPoly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  const FieldPtr& f = a.field();
  if (a.degree() < b.degree()) return {AlgPoly(f), a};
  std::vector<AlgebraicNumber> rem = a.coeffs();
  std::vector<AlgebraicNumber> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), AlgebraicNumber(f));
  const AlgebraicNumber inv = b.lc().inverse();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const AlgebraicNumber c = rem[static_cast<std::size_t>(k)] * inv;
    quo[static_cast<std::size_t>(k - db)] = c;
    if (c.rep().is_zero()) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db), AlgebraicNumber(f));
  return {AlgPoly(f, std::move(quo)), AlgPoly(f, std::move(rem))};
}

AlgebraicNumber eval(const AlgPoly& p, const AlgebraicNumber& x) {
  AlgebraicNumber acc(p.field());
  for (int j = p.degree(); j >= 0; --j) {
    acc *= x;
    acc += p.coeffs()[static_cast<std::size_t>(j)];
  }
  return acc;
}

AlgebraicNumber eval(const AlgPoly& p, const BigRational& x) {
  AlgebraicNumber acc(p.field());
  for (int j = p.degree(); j >= 0; --j) {
    acc *= x;
    acc += p.coeffs()[static_cast<std::size_t>(j)];
  }
  return acc;
}

AlgebraicNumber resultant(const AlgPoly& a, const AlgPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant: zero polynomial");
  const FieldPtr& f = a.field();
  // res(A, B) = (-1)^(mn) lc(B)^(m - deg R) res(B, R), R = A mod B
  AlgebraicNumber scale(f, BigRational(1));
  AlgPoly x = a, y = b;
  while (true) {
    const int m = x.degree(), n = y.degree();
    if (n == 0) return scale * pow(y.lc(), m);
    if (m == 0) return scale * pow(x.lc(), n);
    AlgPoly r = divmod(x, y).second;
    if (r.is_zero()) return AlgebraicNumber(f);
    if ((m % 2 == 1) && (n % 2 == 1)) scale = -scale;
    scale *= pow(y.lc(), m - r.degree());
    x = std::move(y);
    y = std::move(r);
  }
}

AlgPoly gcd(const AlgPoly& a, const AlgPoly& b) {
  AlgPoly x = a, y = b;
  while (!y.is_zero()) {
    AlgPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x *= x.lc().inverse();
}

}  // namespace chazy::algebraic

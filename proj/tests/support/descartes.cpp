#include "descartes.hpp"

#include <algorithm>

namespace oracle {

namespace {

using Coeffs = std::vector<BigRational>;

int sign_changes(const Coeffs& c) {
  int n = 0, last = 0;
  for (const auto& x : c) {
    const int s = x.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

// Coefficients of (1+x)^n p(l + (r-l)/(1+x)); its positive roots correspond
// one-to-one to roots of p in (l, r).
int descartes_bound(const RatPoly& p, const BigRational& l, const BigRational& r) {
  const int n = p.degree();
  // q(y) = p(l + (r - l) y)
  Coeffs q = p.coeffs();
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) q[j] += l * q[j + 1];
  }
  BigRational w = r - l, f = 1;
  for (auto& c : q) {
    c *= f;
    f *= w;
  }
  // reverse, then shift x -> x + 1
  std::reverse(q.begin(), q.end());
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) q[j] += q[j + 1];
  }
  return sign_changes(q);
}

void isolate(const RatPoly& p, const BigRational& l, const BigRational& r, std::vector<IsolatedRoot>& out) {
  const int v = descartes_bound(p, l, r);
  if (v == 0) return;
  if (v == 1) {
    out.push_back({l, r});
    return;
  }
  const BigRational m = (l + r) * BigRational(1, 2);
  isolate(p, l, m, out);
  if (chazy::exact::poly_eval(p, m).is_zero()) out.push_back({m, m});
  isolate(p, m, r, out);
}

BigRational cauchy_bound(const RatPoly& p) {
  BigRational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, (p.coeff(i) / p.lc()).abs());
  return m + 1;
}

// Narrows an isolating interval until x is not strictly inside it, or
// returns true when x is the root.
bool separate(const RatPoly& p, IsolatedRoot& root, const BigRational& x) {
  if (root.lo == root.hi) return root.lo == x;
  if (chazy::exact::poly_eval(p, x).is_zero() && root.lo < x && x < root.hi) return true;
  while (root.lo < x && x < root.hi) {
    const BigRational m = (root.lo + root.hi) * BigRational(1, 2);
    if (chazy::exact::poly_eval(p, m).is_zero()) {
      root.lo = root.hi = m;
      return m == x;
    }
    // (lo, m) holds zero or one root; the Descartes bound has the same parity
    if (descartes_bound(p, root.lo, m) % 2 == 1) root.hi = m;
    else root.lo = m;
  }
  return false;
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p) {
  const RatPoly s = chazy::exact::square_free_part(p);
  std::vector<IsolatedRoot> out;
  if (s.degree() <= 0) return out;
  const BigRational b = cauchy_bound(s);
  isolate(s, -b, b, out);
  return out;
}

int count_in(const RatPoly& p, const std::optional<BigRational>& a, const std::optional<BigRational>& b) {
  const RatPoly s = chazy::exact::square_free_part(p);
  int n = 0;
  for (auto root : isolate_real_roots(s)) {
    bool above_a = true, below_b = true;
    if (a) {
      if (separate(s, root, *a)) above_a = false;
      else above_a = root.lo >= *a;
    }
    if (b) {
      if (separate(s, root, *b)) below_b = true;
      else below_b = root.hi <= *b;
    }
    if (above_a && below_b) ++n;
  }
  return n;
}

}  // namespace oracle

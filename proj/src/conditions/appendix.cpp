#include <cstdio>
#include <stdexcept>

#include "chazy/conditions/conditions.hpp"

namespace chazy::conditions {

using sturm::Point;
using T = AlgPoly::Term;

AppendixPolys gen_appendix_polys(int q) {
  AppendixPolys out;
  const ChazyParams p(q);
  out.field = p.field;
  const auto& f = p.field;
  auto rational = [&](std::vector<BigRational> c) { return AlgPoly(f, RatPoly(std::move(c))); };
  switch (q) {
    case 1:  // gamma = 2^(3/4): sqrt2 = gamma^2/2, 2^(1/4) = gamma^3/4
      out.polys.emplace("p_0", rational({-14, 95, BigRational(-745, 4), 110, -19, 20, -8}));
      out.polys.emplace("p_3", AlgPoly::from_terms(f, {T{12, 1, 0}, T{-29, 2, 1}, T{22, 3, 2}, T{-38, 0, 3},
                                                       T{4, 1, 4}, T{-2, 2, 5}}));
      out.polys.emplace("p_4", AlgPoly::from_terms(f, {T{12, 1, 0}, T{-21, 2, 1}, T{-22, 3, 2}, T{-38, 0, 3},
                                                       T{4, 1, 4}, T{2, 2, 5}}));
      break;
    case 2:  // gamma = 2^(1/6) 3^(1/3): sqrt2 = gamma^3/3, 2^(2/3) 3^(1/3) = gamma^4/3
      out.polys.emplace("p_6", rational({32, -144, -80, 1512, -4545, 3168, -624, 0, 0, 216, -96}));
      out.polys.emplace("p_8", AlgPoly::from_terms(f, {T{32, 1, 0}, T{-49, 2, 1}, T{BigRational(-16, 3), 3, 2},
                                                       T{26, 4, 3}, T{-58, 0, 5}, T{8, 1, 6},
                                                       T{BigRational(-8, 3), 3, 8}}));
      break;
    case 3:  // gamma = 2^(5/8): 2^(1/4) = gamma^2/2, sqrt2 = gamma^4/4, 2^(1/8) = gamma^5/8
      out.polys.emplace("p_10",
                        rational({72, -468, 216, 0, -256, 3744, -15225, 11544, -2412, 0, 0, 0, 0, 416, -192}));
      out.polys.emplace("p_13", AlgPoly::from_terms(f, {T{20, 1, 0}, T{-27, 2, 1}, T{-2, 4, 3}, T{10, 5, 4},
                                                        T{-26, 0, 7}, T{4, 1, 8}, T{-1, 4, 11}}));
      out.polys.emplace("p_14", AlgPoly::from_terms(f, {T{20, 1, 0}, T{-27, 2, 1}, T{2, 4, 3}, T{-10, 5, 4},
                                                        T{-26, 0, 7}, T{4, 1, 8}, T{1, 4, 11}}));
      break;
    default:
      throw std::invalid_argument("gen_appendix_polys: q must be 1, 2 or 3");
  }
  return out;
}

namespace {

struct CountSpec {
  int q;
  const char* name;
  Point a, b;
  const char* label;
  long expected;
};

struct VSpec {
  int q;
  const char* name;
  Point x;
  const char* label;
  long expected;
};

const AlgPoly& lookup(std::map<int, AppendixPolys>& cache, int q, const std::string& name) {
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, gen_appendix_polys(q)).first;
  return it->second.polys.at(name);
}

// Open-interval count of distinct roots over Q(gamma).
long count_open(const sturm::AlgSturmChain& chain, const AlgPoly& p, const Point& a, const Point& b) {
  long n = sturm::count_roots(chain, a, b).count;
  if (sturm::sign_at(p, b) == 0 && !std::holds_alternative<sturm::Infinity>(b)) --n;
  return n;
}

// |x| rounded to `digits` significant digits, as "d.ddddde<exp>" with the sign
// of x. Empty when the enclosure straddles a rounding boundary.
std::string rounded_scientific(const algebraic::RationalInterval& iv, int digits) {
  auto render = [&](const BigRational& x) {
    BigRational a = x.abs();
    if (a.is_zero()) return std::string("0");
    int e = 0;
    while (a >= BigRational(10)) {
      a /= 10;
      ++e;
    }
    while (a < BigRational(1)) {
      a *= 10;
      --e;
    }
    a = a * exact::ipow(BigRational(10), static_cast<long>(digits - 1)) + BigRational(1, 2);
    exact::BigInt m = a.numerator() / a.denominator();
    std::string s = m.get_str();
    if (static_cast<int>(s.size()) > digits) {  // rounded up to the next power of ten
      s.pop_back();
      ++e;
    }
    s.insert(1, ".");
    return std::string(x.sign() < 0 ? "-" : "") + s + "e" + std::to_string(e);
  };
  const std::string lo = render(iv.lo), hi = render(iv.hi);
  return lo == hi ? lo : std::string();
}

}  // namespace

std::vector<AppendixCheck> appendix_regression() {
  std::map<int, AppendixPolys> cache;
  const Point zero = BigRational(0), inf = sturm::pos_inf(), minf = sturm::neg_inf();
  const std::vector<CountSpec> counts = {
      {1, "p_0", BigRational(2), BigRational(5, 2), "roots on (2, 5/2)", 0},
      {1, "p_3", zero, inf, "roots on (0, inf)", 1},
      {1, "p_4", minf, zero, "roots on (-inf, 0)", 1},
      {2, "p_6", BigRational(2), BigRational(9, 4), "roots on (2, 9/4)", 0},
      {2, "p_8", zero, inf, "roots on (0, inf)", 1},
      {2, "p_8", minf, zero, "roots on (-inf, 0)", 1},
      {3, "p_10", BigRational(2), BigRational(13, 6), "roots on (2, 13/6)", 0},
      {3, "p_13", zero, inf, "roots on (0, inf)", 1},
      {3, "p_14", minf, zero, "roots on (-inf, 0)", 1},
  };
  const std::vector<VSpec> vs = {
      {1, "p_0", BigRational(2), "V(2)", 2},      {1, "p_0", BigRational(5, 2), "V(5/2)", 2},
      {1, "p_3", zero, "V(0)", 3},                {1, "p_3", inf, "V(inf)", 2},
      {1, "p_4", minf, "V(-inf)", 4},             {1, "p_4", zero, "V(0)", 3},
      {2, "p_6", BigRational(2), "V(2)", 3},      {2, "p_6", BigRational(9, 4), "V(9/4)", 3},
      {2, "p_8", minf, "V(-inf)", 5},             {2, "p_8", zero, "V(0)", 4},
      {2, "p_8", inf, "V(inf)", 3},               {3, "p_10", BigRational(2), "V(2)", 3},
      {3, "p_10", BigRational(13, 6), "V(13/6)", 3}, {3, "p_13", zero, "V(0)", 5},
      {3, "p_13", inf, "V(inf)", 4},              {3, "p_14", minf, "V(-inf)", 7},
      {3, "p_14", zero, "V(0)", 6},
  };

  std::vector<AppendixCheck> out;
  std::map<std::string, sturm::AlgSturmChain> chains;
  auto chain_of = [&](int q, const std::string& name) -> const sturm::AlgSturmChain& {
    auto it = chains.find(name);
    if (it == chains.end()) it = chains.emplace(name, sturm::AlgSturmChain::build(lookup(cache, q, name))).first;
    return it->second;
  };
  for (const auto& c : counts) {
    const auto& poly = lookup(cache, c.q, c.name);
    out.push_back({c.name, c.label, c.expected, count_open(chain_of(c.q, c.name), poly, c.a, c.b)});
    // the same count through the rationalizing substitution u = w / gamma
    bool has_radicals = false;
    for (const auto& co : poly.coeffs()) has_radicals |= !co.has_rational_rep();
    if (has_radicals) {
      const RatPoly rq = rationalize(poly, 1);
      out.push_back({c.name, std::string(c.label) + " via u = w/gamma", c.expected,
                     sturm::count_roots_with_multiplicity(rq, c.a, c.b, sturm::Interval::open)});
    }
  }
  for (const auto& v : vs) {
    out.push_back({v.name, v.label, v.expected, chain_of(v.q, v.name).sign_variations_at(v.x)});
  }
  return out;
}

std::vector<ResultantCheck> appendix_resultants() {
  std::vector<ResultantCheck> out;
  auto disc = [](const AlgPoly& p) { return algebraic::resultant(p, algebraic::derivative(p)); };
  auto approx = [&](int q, const char* name, const char* expected) {
    const auto r = disc(gen_appendix_polys(q).polys.at(name));
    const std::string got = rounded_scientific(algebraic::enclosure(r, 256), 6);
    out.push_back({name, expected, got, got == expected});
  };
  auto exact_multiple = [&](int q, const char* name, const char* coef, int gamma_exp, BigRational scale,
                            const char* expected) {
    const auto polys = gen_appendix_polys(q);
    const auto r = disc(polys.polys.at(name));
    const auto want = AlgebraicNumber::gamma_power(polys.field, BigRational::parse(coef) * scale, gamma_exp);
    const bool ok = algebraic::is_zero(r - want);
    out.push_back({name, expected, ok ? expected : r.to_string(), ok});
  };
  approx(1, "p_0", "-1.52127e18");
  exact_multiple(1, "p_3", "-5637568724992", 2, BigRational(1, 2), "-5637568724992*sqrt2");
  exact_multiple(1, "p_4", "-88414837800960", 2, BigRational(1, 2), "-88414837800960*sqrt2");
  approx(2, "p_6", "-4.41356e57");
  exact_multiple(2, "p_8", "9669300766922659513289932800", 1, BigRational(1),
                 "9669300766922659513289932800*2^(1/6)*3^(1/3)");
  approx(3, "p_10", "-2.74875e97");
  approx(3, "p_13", "-5.12026e35");
  approx(3, "p_14", "-2.29037e37");
  return out;
}

}  // namespace chazy::conditions

#include "chazy/conditions/conditions.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace chazy::conditions {

using sturm::Interval;
using sturm::Point;
using T = AlgPoly::Term;

ChazyParams::ChazyParams(int q_) : q(q_), k(q_ + 1) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
  field = algebraic::RadicalField::chazy(q);
}

RatPoly gen_P0(int q) {
  if (q < 1) throw std::invalid_argument("gen_P0: q must be >= 1");
  const long Q = q;
  std::vector<BigRational> c(static_cast<std::size_t>(2 * (1 + 2 * q)) + 1);
  auto add = [&](long deg, long coef) { c[static_cast<std::size_t>(deg)] += BigRational(coef); };
  add(0, 8 * Q * Q);
  add(1, -4 * Q * Q * (1 + 4 * Q));
  add(2, 8 * Q * Q * Q);
  add(2 * (Q - 1), -16 * (1 + Q) * (1 + Q));
  add(2 * Q - 1, 8 * (1 + Q) * (3 + 2 * Q) * (1 + 4 * Q));
  add(2 * Q, -(1 + 2 * Q) * (9 + 2 * Q * (7 + 4 * Q) * (7 + 4 * Q)));
  add(2 * Q + 1, 8 * Q * (1 + 4 * Q) * (4 + Q * (5 + 2 * Q)));
  add(2 * (Q + 1), -4 * Q * Q * (7 + 4 * Q * (2 + Q)));
  add(4 * Q + 1, 8 * (1 + Q) * (1 + 4 * Q));
  add(2 * (1 + 2 * Q), -16 * Q * (1 + Q));
  return RatPoly(std::move(c));
}

namespace {

// sqrt2 = gamma^(q+1) / (q+1)
AlgPoly gen_P(const ChazyParams& p, int sgn) {
  const int q = p.q;
  const BigRational q1(q + 1);
  return AlgPoly::from_terms(
      p.field, {
                   T{BigRational(4 * q * (2 + q)), 1, 0},
                   T{BigRational(-(3 + 2 * q) * (3 + 2 * q)), 2, 1},
                   T{BigRational(-8 * q * sgn) / q1, q + 1, q},
                   T{BigRational(2 * (9 + 2 * q) * sgn), q + 2, q + 1},
                   T{BigRational(-2 * (9 + 10 * q)), 0, 1 + 2 * q},
                   T{BigRational(4 * q), 1, 2 * (1 + q)},
                   T{BigRational(-4 * q * sgn) / q1, q + 1, 2 + 3 * q},
               });
}

int parity_sign(int q) { return q % 2 == 0 ? 1 : -1; }

}  // namespace

AlgPoly gen_Pplus(const ChazyParams& p) { return gen_P(p, 1); }
AlgPoly gen_Pminus(const ChazyParams& p) { return gen_P(p, parity_sign(p.q)); }

AlgPoly gen_lemma_poly(const ChazyParams& p) {
  const int q = p.q;
  return AlgPoly::from_terms(p.field, {T{BigRational(-q), 0, 0}, T{BigRational(-(1 + q)), 1, 1},
                                       T{BigRational(1), q + 1, q + 1}});
}

RatPoly rationalize(const AlgPoly& poly, int residue) {
  const int n = poly.field()->index();
  const BigRational& r = poly.field()->radicand();
  std::vector<BigRational> out(static_cast<std::size_t>(poly.degree() + 1));
  for (int j = 0; j <= poly.degree(); ++j) {
    const RatPoly& rep = poly.coeffs()[static_cast<std::size_t>(j)].rep();
    for (int k = 0; k <= rep.degree(); ++k) {
      const BigRational& c = rep.coeffs()[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      // c gamma^k (w/gamma)^j = c gamma^(k-j) w^j and k - j = residue + m N
      const int shift = k - j - residue;
      if (((shift % n) + n) % n != 0) {
        throw std::logic_error("rationalize: gamma exponent " + std::to_string(k) + " at u^" +
                               std::to_string(j) + " is outside the residue class " + std::to_string(residue));
      }
      const int m = (shift >= 0) ? shift / n : -((-shift) / n);
      out[static_cast<std::size_t>(j)] += c * exact::ipow(r, m);
    }
  }
  return RatPoly(std::move(out));
}

RatPoly gen_Qplus(const ChazyParams& p) { return rationalize(gen_Pplus(p), 1); }
RatPoly gen_Qminus(const ChazyParams& p) { return rationalize(gen_Pminus(p), 1); }
RatPoly gen_lemma_rational(const ChazyParams& p) { return rationalize(gen_lemma_poly(p), 0); }

ConditionReport check_conditions(int q) {
  const auto start = std::chrono::steady_clock::now();
  const ChazyParams p(q);
  ConditionReport rep;
  rep.q = q;

  // C1: P0 on (2, (1+4q)/(2q)), distinct roots
  {
    const RatPoly p0 = gen_P0(q);
    const BigRational b(1 + 4 * q, 2 * q);
    const auto chain = sturm::SturmChain::build(p0);
    int n = sturm::count_roots(chain, BigRational(2), b).count;
    if (sturm::is_root(p0, b)) --n;
    rep.c1_roots = n;
  }
  // C2: P+ on (0, 1/gamma) becomes Q+ on (0, 1) under u = w/gamma
  rep.c2_roots = sturm::count_roots_with_multiplicity(gen_Qplus(p), BigRational(0), BigRational(1), Interval::open);
  // C3: P- on (-2, 0) becomes Q- on (-2 gamma, 0)
  {
    const Point a = AlgebraicNumber::gamma_power(p.field, -2, 1);
    rep.c3_roots = sturm::count_roots_with_multiplicity(gen_Qminus(p), a, BigRational(0), Interval::open);
  }
  rep.pass = rep.c1_roots == 0 && rep.c2_roots <= 1 && rep.c3_roots <= 1;
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<ConditionReport> scan(int q_min, int q_max, int jobs) {
  if (q_min < 1 || q_max < q_min) throw std::invalid_argument("scan: need 1 <= q_min <= q_max");
  const int count = q_max - q_min + 1;
  std::vector<ConditionReport> out(static_cast<std::size_t>(count));
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, count);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (int i = next++; i < count; i = next++) {
      try {
        out[static_cast<std::size_t>(i)] = check_conditions(q_min + i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

Endpoints isolate_endpoint(int q, unsigned long bits) {
  const ChazyParams p(q);
  const RatPoly lemma = gen_lemma_rational(p);  // w^(q+1) - (q+1) w - q
  const auto chain = sturm::SturmChain::build(lemma);

  Endpoints e{q, AlgebraicNumber::gamma_power(p.field, 1, -1), 0.0, BigRational(2), 0.0, {}, 0.0, 0.0, 0, 0};
  e.descartes_sign_changes = exact::coefficient_sign_changes(lemma);
  e.positive_roots = sturm::count_roots(chain, BigRational(0), sturm::pos_inf()).count;
  if (e.positive_roots != 1) {
    throw std::runtime_error("isolate_endpoint: endpoint polynomial has " + std::to_string(e.positive_roots) +
                             " positive roots for q = " + std::to_string(q));
  }
  // x_iI < 2 <=> w* < 2 gamma <=> no root in (2 gamma, inf)
  const Point two_gamma = AlgebraicNumber::gamma_power(p.field, 2, 1);
  if (sturm::count_roots(chain, two_gamma, sturm::pos_inf()).count != 0 || sturm::is_root(lemma, two_gamma)) {
    throw std::runtime_error("isolate_endpoint: x_iI >= 2 for q = " + std::to_string(q));
  }

  // bisect w* on (0, 2 + q]; the endpoint polynomial is negative left of w*
  BigRational lo(0), hi(2 + q);
  const BigRational eps = exact::ipow(BigRational(2), -static_cast<long>(bits) - 4);
  while (hi - lo > eps) {
    const BigRational mid = (lo + hi) * BigRational(1, 2);
    const int s = exact::poly_eval(lemma, mid).sign();
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    if (s < 0) lo = mid;
    else hi = mid;
  }
  // x = w / gamma with gamma inside a dyadic enclosure
  const auto g = p.field->generator_enclosure(bits + 8);
  e.x_iI = {lo / g.upper(), hi / g.lower()};
  e.x_iI_float = ((e.x_iI.lo + e.x_iI.hi) * BigRational(1, 2)).to_double();
  e.u_iI = -e.x_iI_float;
  e.u_iD_float = algebraic::to_float(e.u_iD, 64).value;
  const double gamma = algebraic::to_float(AlgebraicNumber::generator(p.field), 64).value;
  e.u_fI = -std::pow(static_cast<double>(q), 1.0 / (q + 1)) / gamma;
  return e;
}

}  // namespace chazy::conditions

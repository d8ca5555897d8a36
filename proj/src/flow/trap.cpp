#include "chazy/flow/trap.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "chazy/conditions/conditions.hpp"
#include "chazy/flow/field.hpp"

namespace chazy::flow {

namespace {

using Real = boost::multiprecision::mpfr_float;

// v = phi(u) on [lo, hi]; d = +1 when the boundary runs towards larger u with
// the region on its left, so inward means d <grad g, X> > 0 for g = v - phi(u)
struct Piece {
  std::string name;
  std::function<Real(const Real&)> phi, dphi;
  Real lo, hi;
  int d;
  bool inward;
  bool touches_zero;
};

Real from_rational(const exact::BigRational& r) {
  return Real(r.numerator().get_str()) / Real(r.denominator().get_str());
}

Real root(const Real& x, long n) { return pow(x, Real(1) / n); }

int sgn(const Real& x) { return (x > 0) - (x < 0); }

// v = a |u|^p + b
Piece power_piece(std::string name, int p, Real a, Real b, Real lo, Real hi, int d) {
  auto phi = [=](const Real& u) { return Real(a * pow(abs(u), p) + b); };
  auto dphi = [=](const Real& u) {
    return p == 1 ? Real(a * sgn(u)) : Real(a * p * pow(abs(u), p - 1) * sgn(u));
  };
  return {std::move(name), phi, dphi, lo, hi, d, true, true};
}

Piece line_piece(std::string name, Real slope, Real icpt, Real lo, Real hi, int d, bool touches_zero) {
  return {std::move(name), [=](const Real& u) { return Real(slope * u + icpt); },
          [=](const Real&) { return slope; }, lo, hi, d, true, touches_zero};
}

Piece hyperbola_piece(std::string name, Real lo, Real hi, int d, bool inward) {
  return {std::move(name), [](const Real& u) { return Real(-1 / u); }, [](const Real& u) { return Real(1 / (u * u)); },
          lo, hi, d, inward, false};
}

struct Ends {
  Real u_iD, u_fD, u_iI, u_fI, b, gamma;
};

Ends general_ends(int q, unsigned bits) {
  const Real Q = q;
  Ends e;
  e.gamma = root(2 * (Q + 1) * (Q + 1), 2 * (q + 1));
  e.u_iD = 1 / e.gamma;
  e.u_fD = 2;
  e.u_fI = -pow(sqrt(Real(2)) * (1 + Q) / Q, Real(-1) / (1 + q));
  const auto ep = conditions::isolate_endpoint(q, bits);
  e.u_iI = -(from_rational(ep.x_iI.lo) + from_rational(ep.x_iI.hi)) / 2;
  e.b = (1 + 4 * Q) / (2 * Q);
  return e;
}

std::vector<Piece> general_pieces(int q, const Ends& e) {
  const Real Q = q, s2 = sqrt(Real(2));
  const Real c = (1 + Q) * e.gamma;  // 2^(1/(2(1+q))) (1+q)^((2+q)/(1+q))
  const Real a = (1 + Q) * s2 / Q;
  std::vector<Piece> p;
  p.push_back(hyperbola_piece("Sigma_D", e.u_iD, e.u_fD, +1, true));
  p.push_back(hyperbola_piece("Sigma_I", e.u_iI, e.u_fI, -1, false));
  p.push_back(line_piece("U1", 0, 0, 0, e.b, -1, true));
  p.push_back(line_piece("U2", Q, -(1 + 4 * Q) / 2, e.u_fD, e.b, +1, false));
  p.push_back(power_piece("U3", q, a, -c / Q, 0, e.u_iD, +1));
  p.push_back(power_piece("U4", q, a, -c / Q, e.u_iI, 0, +1));
  p.push_back(power_piece("U5", q, a, 0, e.u_fI, 0, -1));
  return p;
}

// the q = 1, 2, 3 pieces, with endpoints and constants written in closed form
std::vector<Piece> closed_form_pieces(int q) {
  const Real s2 = sqrt(Real(2));
  std::vector<Piece> p;
  if (q == 1) {
    const Real iD = 1 / root(Real(8), 4), iI = -(1 + s2) / root(Real(8), 4), fI = -1 / root(Real(8), 4);
    const Real c = root(Real(2), 4) * 2 * s2;  // 2^(7/4)
    p.push_back(line_piece("R1", 0, 0, 0, Real(5) / 2, -1, true));
    p.push_back(line_piece("R2", 1, Real(-5) / 2, 2, Real(5) / 2, +1, false));
    p.push_back(power_piece("R3", 1, 2 * s2, -c, 0, iD, +1));
    p.push_back(power_piece("R4", 1, 2 * s2, -c, iI, 0, +1));
    p.push_back(power_piece("R5", 1, 2 * s2, 0, fI, 0, -1));
  } else if (q == 2) {
    const Real r2 = root(Real(2), 6), r3 = root(Real(3), 3);  // 2^(1/6), 3^(1/3)
    const Real iD = 1 / (r2 * r3), iI = -pow(r2, 5) / r3, fI = -r2 / r3;
    const Real c = 3 * r3 / pow(r2, 5);  // 3^(4/3) / 2^(5/6)
    p.push_back(line_piece("S1", 0, 0, 0, Real(9) / 4, -1, true));
    p.push_back(line_piece("S2", 2, Real(-9) / 2, 2, Real(9) / 4, +1, false));
    p.push_back(power_piece("S3", 2, 3 / s2, -c, 0, iD, +1));
    p.push_back(power_piece("S4", 2, 3 / s2, -c, iI, 0, +1));
    p.push_back(power_piece("S5", 2, 3 / s2, 0, fI, 0, -1));
  } else if (q == 3) {
    const Real r8 = root(Real(2), 8);  // 2^(1/8)
    const Real iD = 1 / pow(r8, 5), fI = -root(Real(3), 4) / pow(r8, 5);
    const Real a1 = 1 + s2, a13 = root(a1, 3), sq = sqrt(a1 - a13);
    const Real D = pow(r8, 13) * a13 * sq;
    const Real N = -2 - s2 + s2 * a13 - sqrt(-6 - 4 * s2 - 2 * a13 * a13 + 4 * a13 * a1 + 4 * (2 + s2) * sq);
    const Real iI = N / D;
    const Real c = pow(r8, 21) / 3;  // 2^(21/8) / 3
    p.push_back(line_piece("T1", 0, 0, 0, Real(13) / 6, -1, true));
    p.push_back(line_piece("T2", 3, Real(-13) / 2, 2, Real(13) / 6, +1, false));
    p.push_back(power_piece("T3", 3, 4 * s2 / 3, -c, 0, iD, +1));
    p.push_back(power_piece("T4", 3, 4 * s2 / 3, -c, iI, 0, +1));
    p.push_back(power_piece("T5", 3, 4 * s2 / 3, 0, fI, 0, -1));
  }
  return p;
}

PieceReport check_piece(int q, const Piece& pc, int n, const Real& r) {
  PieceReport rep;
  rep.name = pc.name;
  rep.expected = pc.inward ? "inward" : "outward";
  Real lo = pc.lo, hi = pc.hi;
  if (pc.touches_zero) {
    if (lo >= 0) lo = std::max(lo, r);
    if (hi <= 0) hi = std::min(hi, Real(-r));
  }
  rep.u_lo = lo.convert_to<double>();
  rep.u_hi = hi.convert_to<double>();
  rep.samples = n;
  bool first = true;
  Real worst = 0;
  for (int k = 0; k < n; ++k) {
    const Real u = lo + (hi - lo) * k / (n - 1);
    const Real v = pc.phi(u);
    const auto X = planar_field<Real>(q, -1, Real(1), u, v, sgn(u));
    const Real val = pc.d * (X[1] - pc.dphi(u) * X[0]);
    const bool good = pc.inward ? val > 0 : val < 0;
    if (!good) {
      if (rep.violations == 0) rep.worst_u = u.convert_to<double>();
      ++rep.violations;
    }
    if (first || abs(val) < worst) {
      worst = abs(val);
      if (rep.violations == 0) rep.worst_u = u.convert_to<double>();
      first = false;
    }
  }
  rep.min_abs_margin = worst.convert_to<double>();
  rep.ok = rep.violations == 0;
  return rep;
}

struct PrecisionScope {
  unsigned saved;
  explicit PrecisionScope(unsigned digits) : saved(Real::default_precision()) { Real::default_precision(digits); }
  ~PrecisionScope() { Real::default_precision(saved); }
};

}  // namespace

TrapReport validate_trap_region(int q, int samples_per_piece, double exclusion_radius) {
  if (q < 1) throw std::invalid_argument("validate_trap_region: q must be >= 1");
  if (samples_per_piece < 2) throw std::invalid_argument("validate_trap_region: need at least 2 samples");
  if (!(exclusion_radius > 0) || !(exclusion_radius < 0.5)) {
    throw std::invalid_argument("validate_trap_region: exclusion radius must lie in (0, 0.5)");
  }
  // near u = 0 the margin on U5 is of order u^(2q) against O(1) terms
  const unsigned digits =
      40 + static_cast<unsigned>(std::ceil((2.0 * q + 2.0) * std::log10(1.0 / exclusion_radius)));
  PrecisionScope scope(digits);

  TrapReport rep;
  rep.q = q;
  rep.samples_per_piece = samples_per_piece;
  rep.exclusion_radius = exclusion_radius;
  rep.digits = digits;
  const Real r = exclusion_radius;
  const auto ends = general_ends(q, static_cast<unsigned>(digits * 3.33) + 16);
  auto pieces = general_pieces(q, ends);
  for (auto& p : closed_form_pieces(q)) pieces.push_back(std::move(p));
  rep.pass = true;
  for (const auto& pc : pieces) {
    rep.pieces.push_back(check_piece(q, pc, samples_per_piece, r));
    rep.pass = rep.pass && rep.pieces.back().ok;
  }
  return rep;
}

}  // namespace chazy::flow

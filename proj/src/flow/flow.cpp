#include "chazy/flow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "chazy/conditions/conditions.hpp"

namespace chazy::flow {

namespace {

using E2 = EventSpec<2>;
using E3 = EventSpec<3>;

constexpr double kLongTime = 1e3;

int sgn(double x) { return (x > 0) - (x < 0); }

void require_q(int q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
}

double norm3(const State3& a, const State3& b) {
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2]));
}

// bisection on h over [a, b] with h(a) < 0 < h(b)
template <class H>
FixedPoint bisect(H h, double a, double b, double h_tol, const char* what) {
  FixedPoint fp;
  const double ha = h(a).first;
  const double hb = h(b).first;
  fp.h_at_iD = ha;
  fp.h_at_fD = hb;
  if (!(ha < 0 && hb > 0)) {
    throw BracketError(std::string(what) + ": h(u_iD) = " + std::to_string(ha) + ", h(u_fD) = " +
                       std::to_string(hb) + "; expected h(u_iD) < 0 < h(u_fD)");
  }
  double m = 0.5 * (a + b), hm = 0.0, tm = 0.0;
  for (int it = 0; it < 200; ++it) {
    m = 0.5 * (a + b);
    std::tie(hm, tm) = h(m);
    fp.iterations = it + 1;
    if (std::abs(hm) < h_tol || b - a < 1e-15) break;
    if (hm < 0) a = m;
    else b = m;
  }
  fp.u_star = m;
  fp.t_star = tm;
  fp.h_at_star = hm;
  return fp;
}

}  // namespace

bool admissible(const PlanarPoint& p, double omega, double tol) { return p.u * p.v + omega * omega >= -tol; }

Velocity eval_field(const FieldSpec& spec, const PlanarPoint& p) {
  require_q(spec.q);
  if (!(spec.omega > 0)) throw std::invalid_argument("eval_field: omega must be positive");
  if (!admissible(p, spec.omega)) throw std::domain_error("eval_field: point with uv + omega^2 < 0");
  const int side = p.u == 0.0 ? -1 : 0;
  const auto f = planar_field<double>(spec.q, static_cast<int>(spec.branch), spec.omega, p.u, p.v, side);
  return {f[0], f[1]};
}

double energy(int q, double x, double y, double z) {
  return x * z - 0.5 * y * y + std::pow(std::abs(x), q) * x * y;
}

double sheet_y(int q, int sign, double omega, double x, double z) {
  const double r = std::max(0.0, std::pow(std::abs(x), 2 * (1 + q)) + 2 * x * z + 2 * omega * omega);
  return std::pow(std::abs(x), q) * x + sign * std::sqrt(r);
}

Trajectory integrate(const FieldSpec& spec, const PlanarPoint& p0, double t_max, const OdeOptions& opt,
                     const std::vector<double>& sample_times) {
  require_q(spec.q);
  if (!admissible(p0, spec.omega, 1e-12)) throw std::domain_error("integrate: inadmissible start point");
  const int q = spec.q, branch = static_cast<int>(spec.branch);
  const double omega = spec.omega;
  auto rhs = [=](const State<2>& x, State<2>& dx, int side) {
    const auto f = planar_field<double>(q, branch, omega, x[0], x[1], side);
    dx[0] = f[0];
    dx[1] = f[1];
  };
  std::vector<E2> events;
  events.push_back({"hyperbola", [omega](const State<2>& x) { return x[0] * x[1] + omega * omega; }, -1,
                    E2::Action::stop, {}, -1});
  events.push_back({"u=0", [](const State<2>& x) { return x[0]; }, 0, E2::Action::switch_side, {}, 0});
  // at u = 0 the minus flow moves left and the plus flow right
  const int side0 = p0.u != 0.0 ? sgn(p0.u) : branch;
  const auto run = integrate_events<2>(rhs, {p0.u, p0.v}, side0, t_max, events, opt, sample_times);

  Trajectory tr;
  tr.t = run.t;
  tr.p.reserve(run.x.size());
  for (const auto& s : run.x) tr.p.push_back({s[0], s[1]});
  tr.t_end = run.t_end;
  tr.p_end = {run.x_end[0], run.x_end[1]};
  tr.u_zero_crossings = run.switches;
  tr.steps = run.steps;
  tr.end = run.end == EndReason::event ? EndTag::hyperbola
           : run.end == EndReason::step_limit ? EndTag::step_limit
                                               : EndTag::time_limit;
  return tr;
}

SectionEnds section_ends(int q) {
  require_q(q);
  const auto e = conditions::isolate_endpoint(q);
  return {q, e.u_iD_float, 2.0, e.u_iI, e.u_fI};
}

Transition transition_map(int q, double u0, const OdeOptions& opt) {
  if (!(u0 > 0)) throw std::invalid_argument("transition_map: u0 must be positive");
  const auto tr = integrate({q, Branch::minus, 1.0}, {u0, -1.0 / u0}, kLongTime, opt);
  if (tr.end == EndTag::step_limit) throw FlowError("transition_map: step budget exhausted");
  if (tr.end != EndTag::hyperbola) throw FlowError("transition_map: no hyperbola crossing before t = 1000");
  if (!(tr.p_end.u < 0)) {
    throw FlowError("transition_map: crossed uv + 1 = 0 at u = " + std::to_string(tr.p_end.u) +
                    " > 0; the trapping region is violated");
  }
  Transition t;
  t.u0 = u0;
  t.u1 = tr.p_end.u;
  t.v1 = tr.p_end.v;
  t.time = tr.t_end;
  t.u_zero_crossings = tr.u_zero_crossings;
  t.residual = std::abs(t.u1 * t.v1 + 1.0);
  return t;
}

FixedPoint find_fixed_point(int q, double h_tol, const OdeOptions& opt) {
  const auto ends = section_ends(q);
  auto h = [&](double u) {
    const auto t = transition_map(q, u, opt);
    return std::pair{t.u1 + u, t.time};
  };
  return bisect(h, ends.u_iD, ends.u_fD, h_tol, "find_fixed_point");
}

Trajectory3 integrate_3d(int q, double k, const State3& x0, double t_max, const OdeOptions& opt, Stop3 stop,
                         const std::vector<double>& sample_times) {
  require_q(q);
  auto rhs = [=](const State3& s, State3& ds, int side) {
    const double ax = std::abs(s[0]);
    const double xq = q == 1 ? ax : std::pow(ax, q);
    ds[0] = s[1];
    ds[1] = s[2];
    ds[2] = -xq * s[2] - k * signed_factor(q, s[0], side) * s[1] * s[1];
  };
  std::vector<E3> events;
  events.push_back({"x=0", [](const State3& s) { return s[0]; }, 0, E3::Action::switch_side, {}, 0});
  events.push_back({"y=0", [](const State3& s) { return s[1]; }, 0, E3::Action::record, {}, -1});
  if (stop.y_direction != 0) {
    const int xs = stop.x_sign;
    events.push_back({"return", [](const State3& s) { return s[1]; }, stop.y_direction, E3::Action::stop,
                      [xs](const State3& s) { return xs == 0 || sgn(s[0]) == xs; }, -1});
  }
  if (x0[0] == 0.0 && x0[1] == 0.0) throw std::invalid_argument("integrate_3d: start with x = y = 0");
  const int side0 = x0[0] != 0.0 ? sgn(x0[0]) : sgn(x0[1]);
  const auto run = integrate_events<3>(rhs, x0, side0, t_max, events, opt, sample_times);

  Trajectory3 tr;
  tr.t = run.t;
  tr.x = run.x;
  for (const auto& h : run.hits) {
    if (h.name == "y=0") tr.y_zero.push_back(h);
    if (h.name == "x=0") tr.x_zero_times.push_back(h.t);
  }
  tr.t_end = run.t_end;
  tr.x_end = run.x_end;
  tr.x_zero_crossings = run.switches;
  tr.stopped_on_return = run.end == EndReason::event;
  tr.end = run.end == EndReason::step_limit ? EndTag::step_limit : EndTag::time_limit;
  return tr;
}

HalfReturn half_return_map(int q, double u0, const OdeOptions& opt) {
  if (!(u0 > 0)) throw std::invalid_argument("half_return_map: u0 must be positive");
  const auto tr = integrate_3d(q, q + 1, {u0, 0.0, -1.0 / u0}, kLongTime, opt, {+1, -1});
  if (tr.end == EndTag::step_limit) throw FlowError("half_return_map: step budget exhausted");
  if (!tr.stopped_on_return) throw FlowError("half_return_map: no return to y = 0 with x < 0");
  return {u0, tr.x_end[0], tr.x_end[2], tr.t_end, tr.x_zero_crossings};
}

FixedPoint find_symmetric_orbit(int q, double h_tol, const OdeOptions& opt) {
  const auto ends = section_ends(q);
  auto h = [&](double u) {
    const auto r = half_return_map(q, u, opt);
    return std::pair{r.x1 + u, r.time};
  };
  return bisect(h, ends.u_iD, ends.u_fD, h_tol, "find_symmetric_orbit");
}

namespace {

struct Scale {
  double x, y, z, t;
};

Scale scale_for(int q, double omega) {
  const double a = 1.0 / (1 + q);
  return {std::pow(omega, a), omega, std::pow(omega, (1 + 2 * q) * a), std::pow(omega, -q * a)};
}

}  // namespace

OrbitResult lift_orbit(int q, double omega, int samples, const OdeOptions& opt) {
  return lift_orbit(q, omega, find_symmetric_orbit(q, 1e-10, opt), samples, opt);
}

OrbitResult lift_orbit(int q, double omega, const FixedPoint& sym, int samples, const OdeOptions& opt) {
  require_q(q);
  if (!(omega > 0)) throw std::invalid_argument("lift_orbit: omega must be positive");
  if (samples < 4) samples = 4;
  const int half = samples / 2;
  OrbitResult r;
  r.q = q;
  r.omega = omega;
  r.u_star = sym.u_star;
  r.t_star = sym.t_star;
  r.bracket = sym;
  const Scale sc = scale_for(q, omega);
  r.period_time_rescaling = 2 * sym.t_star * sc.t;
  r.period_alt_scaling = 2 * sym.t_star * std::pow(omega, (1.0 + q) / q);

  // half orbit at omega = 1, the other half by (x, y, z) -> -(x, y, z)
  std::vector<double> s(static_cast<std::size_t>(half) + 1);
  for (int i = 0; i <= half; ++i) s[static_cast<std::size_t>(i)] = sym.t_star * i / half;
  const State3 p1{sym.u_star, 0.0, -1.0 / sym.u_star};
  const auto h1 = integrate_3d(q, q + 1, p1, sym.t_star, opt, {}, s);
  if (h1.x.size() != s.size()) throw FlowError("lift_orbit: half orbit sampling incomplete");
  r.x_zero_crossings = 2 * h1.x_zero_crossings;

  std::vector<State3> unit(2 * static_cast<std::size_t>(half) + 1);
  std::vector<double> tau(unit.size());
  for (int i = 0; i <= half; ++i) {
    unit[static_cast<std::size_t>(i)] = h1.x[static_cast<std::size_t>(i)];
    tau[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i)];
  }
  for (int i = 1; i <= half; ++i) {
    const auto& a = h1.x[static_cast<std::size_t>(i)];
    unit[static_cast<std::size_t>(half + i)] = {-a[0], -a[1], -a[2]};
    tau[static_cast<std::size_t>(half + i)] = sym.t_star + s[static_cast<std::size_t>(i)];
  }

  // scale and put y back on its sheet
  int prev_sheet = 0;
  r.curve.reserve(unit.size());
  for (std::size_t i = 0; i < unit.size(); ++i) {
    const auto& a = unit[i];
    const double x = sc.x * a[0], z = sc.z * a[2], y_scaled = sc.y * a[1];
    const int sheet = (a[1] - std::pow(std::abs(a[0]), q) * a[0]) >= 0 ? 1 : -1;
    if (prev_sheet != 0 && sheet != prev_sheet) ++r.fold_crossings;
    prev_sheet = sheet;
    const double y = sheet_y(q, sheet, omega, x, z);
    r.sheet_error = std::max(r.sheet_error, std::abs(y - y_scaled) / (1 + std::abs(y_scaled)));
    r.curve.push_back({tau[i] * sc.t, x, y, z});
  }

  // direct integration at omega from the scaled departure point
  const State3 p0{sc.x * sym.u_star, 0.0, -sc.z / sym.u_star};
  std::vector<double> times;
  times.reserve(r.curve.size());
  for (const auto& c : r.curve) times.push_back(c.t);
  const double t_max = 2.0 * times.back() + 10.0;
  const auto d = integrate_3d(q, q + 1, p0, t_max, opt, {-1, +1}, times);
  if (!d.stopped_on_return) throw FlowError("lift_orbit: direct integration did not return to y = 0, x > 0");
  r.period = d.t_end;
  r.x_zero_times = d.x_zero_times;
  r.closure_error = norm3(d.x_end, p0);

  const double w2 = omega * omega;
  auto drift = [&](const State3& a) { return std::abs(energy(q, a[0], a[1], a[2]) + w2) / w2; };
  for (const auto& c : r.curve) r.energy_drift = std::max(r.energy_drift, drift({c.x, c.y, c.z}));
  for (const auto& a : d.x) r.energy_drift = std::max(r.energy_drift, drift(a));
  r.energy_drift = std::max(r.energy_drift, drift(d.x_end));

  for (std::size_t i = 0; i < d.x.size(); ++i) {
    const auto& c = r.curve[i];
    r.curve_deviation = std::max(r.curve_deviation, norm3(d.x[i], {c.x, c.y, c.z}));
  }
  for (std::size_t i = 0; i + static_cast<std::size_t>(half) < d.x.size(); ++i) {
    const auto& a = d.x[i];
    const auto& b = d.x[i + static_cast<std::size_t>(half)];
    r.symmetry_error = std::max(r.symmetry_error, norm3(a, {-b[0], -b[1], -b[2]}));
  }
  return r;
}

double scaling_residual(int q, double omega, const FixedPoint& sym, int samples, const OdeOptions& opt) {
  require_q(q);
  if (samples < 2) samples = 2;
  const Scale sc = scale_for(q, omega);
  std::vector<double> tau(static_cast<std::size_t>(samples) + 1), t(tau.size());
  for (int i = 0; i <= samples; ++i) {
    tau[static_cast<std::size_t>(i)] = 2 * sym.t_star * i / samples;
    t[static_cast<std::size_t>(i)] = tau[static_cast<std::size_t>(i)] * sc.t;
  }
  const State3 p1{sym.u_star, 0.0, -1.0 / sym.u_star};
  const State3 pw{sc.x * p1[0], 0.0, sc.z * p1[2]};
  const auto a = integrate_3d(q, q + 1, p1, tau.back(), opt, {}, tau);
  const auto b = integrate_3d(q, q + 1, pw, t.back(), opt, {}, t);
  if (a.x.size() != tau.size() || b.x.size() != t.size()) throw FlowError("scaling_residual: sampling incomplete");
  double res = 0.0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const auto& u = a.x[i];
    res = std::max(res, norm3(b.x[i], {sc.x * u[0], sc.y * u[1], sc.z * u[2]}));
  }
  return res;
}

PlanarLiftCheck planar_lift_check(int q, const FixedPoint& planar, const OdeOptions& opt) {
  const auto tr = transition_map(q, planar.u_star, opt);
  const State3 p{planar.u_star, 0.0, -1.0 / planar.u_star};
  const auto d = integrate_3d(q, q + 1, p, tr.time, opt);
  PlanarLiftCheck c;
  c.u = planar.u_star;
  c.t = tr.time;
  c.reached = d.x_end;
  c.distance = norm3(d.x_end, {-p[0], -p[1], -p[2]});
  c.projection_error = std::hypot(d.x_end[0] - tr.u1, d.x_end[2] - tr.v1);
  return c;
}

}  // namespace chazy::flow

#pragma once

// Adaptive DOPRI5 with dense output and event location, for the planar and
// 3D Chazy systems. A "side" integer is carried along so the right-hand side
// knows which one-sided formula applies at a switching surface.

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace chazy::flow {

template <std::size_t N>
using State = std::array<double, N>;

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double event_tol = 1e-12;
  double max_dt = 0.05;
  long max_steps = 2'000'000;
};

template <std::size_t N>
struct EventSpec {
  enum class Action { stop, switch_side, record };
  std::string name;
  std::function<double(const State<N>&)> g;
  int direction = 0;  // -1: g from > 0 to <= 0, +1: g from < 0 to >= 0, 0: either
  Action action = Action::stop;
  std::function<bool(const State<N>&)> guard;  // checked at the located point
  int snap = -1;  // component forced to exactly 0 on a side switch
};

template <std::size_t N>
struct EventHit {
  std::string name;
  double t = 0.0;
  State<N> x{};
};

enum class EndReason { event, time_limit, step_limit };

template <std::size_t N>
struct Run {
  std::vector<double> t;
  std::vector<State<N>> x;
  std::vector<EventHit<N>> hits;  // record and switch events, then the stop event
  EndReason end = EndReason::time_limit;
  std::string end_event;
  double t_end = 0.0;
  State<N> x_end{};
  int side = 0;
  long steps = 0;
  int switches = 0;
};

namespace detail {

inline bool crossed(double g0, double g1, int direction) {
  if (direction < 0) return g0 > 0 && g1 <= 0;
  if (direction > 0) return g0 < 0 && g1 >= 0;
  return (g0 > 0 && g1 <= 0) || (g0 < 0 && g1 >= 0);
}

}  // namespace detail

/// Integrates x' = f(x, side) from t = 0. Rhs: void(const State&, State&, int side).
/// sample_times (sorted, may be empty) are recorded through dense output;
/// with no sample times every accepted step is recorded.
template <std::size_t N, class Rhs>
Run<N> integrate_events(Rhs rhs, const State<N>& x0, int side0, double t_max,
                        const std::vector<EventSpec<N>>& events, const OdeOptions& opt,
                        const std::vector<double>& sample_times = {}) {
  namespace odeint = boost::numeric::odeint;
  using Stepper = odeint::runge_kutta_dopri5<State<N>>;
  if (!(opt.rtol > 0) || !(opt.atol > 0) || !(opt.event_tol > 0)) {
    throw std::invalid_argument("integrate_events: tolerances must be positive");
  }
  Run<N> run;
  run.side = side0;
  int side = side0;
  auto sys = [&](const State<N>& x, State<N>& dx, double) { rhs(x, dx, side); };
  auto dense = opt.max_dt > 0 ? odeint::make_dense_output(opt.atol, opt.rtol, opt.max_dt, Stepper())
                              : odeint::make_dense_output(opt.atol, opt.rtol, Stepper());

  std::size_t next_sample = 0;
  const bool every_step = sample_times.empty();
  auto record = [&](double t, const State<N>& x) {
    run.t.push_back(t);
    run.x.push_back(x);
  };

  State<N> x = x0;
  double t0 = 0.0;
  const double dt0 = std::min(1e-3, opt.max_dt > 0 ? opt.max_dt : 1e-3);
  dense.initialize(x, t0, dt0);
  if (every_step) record(0.0, x);
  while (next_sample < sample_times.size() && sample_times[next_sample] <= 0.0) {
    record(sample_times[next_sample++], x);
  }

  std::vector<double> g_prev(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) g_prev[i] = events[i].g(x);

  State<N> tmp;
  while (true) {
    if (run.steps >= opt.max_steps) {
      run.end = EndReason::step_limit;
      run.t_end = dense.current_time();
      run.x_end = dense.current_state();
      break;
    }
    const auto [ta, tb] = dense.do_step(sys);
    ++run.steps;
    const State<N> xb = dense.current_state();

    // located crossings inside (ta, tb]; record events only log, the earliest
    // stop or switch event ends the step
    int which = -1;
    double t_hit = std::numeric_limits<double>::infinity();
    std::vector<EventHit<N>> logged;
    std::vector<double> g_now(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
      g_now[i] = events[i].g(xb);
      if (!detail::crossed(g_prev[i], g_now[i], events[i].direction)) continue;
      double lo = ta, hi = tb;
      double g_lo = g_prev[i];
      if (g_now[i] != 0.0) {
        // bisect on the dense interpolant; the crossing test keeps the side
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (mid <= lo || mid >= hi) break;
          dense.calc_state(mid, tmp);
          const double gm = events[i].g(tmp);
          if (detail::crossed(g_lo, gm, events[i].direction)) {
            hi = mid;
            if (std::abs(gm) <= opt.event_tol * 1e-3) break;
          } else {
            lo = mid;
            g_lo = gm;
          }
        }
      }
      dense.calc_state(hi, tmp);
      if (events[i].guard && !events[i].guard(tmp)) continue;
      if (hi > t_max) continue;
      if (events[i].action == EventSpec<N>::Action::record) {
        logged.push_back({events[i].name, hi, tmp});
      } else if (hi < t_hit) {
        t_hit = hi;
        which = static_cast<int>(i);
      }
    }
    std::sort(logged.begin(), logged.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    for (const auto& h : logged) {
      if (h.t <= t_hit) run.hits.push_back(h);
    }

    const double t_cut = which >= 0 ? t_hit : std::min(tb, t_max);
    while (next_sample < sample_times.size() && sample_times[next_sample] <= t_cut) {
      dense.calc_state(sample_times[next_sample], tmp);
      record(sample_times[next_sample++], tmp);
    }

    if (which >= 0) {
      const auto& ev = events[static_cast<std::size_t>(which)];
      dense.calc_state(t_hit, tmp);
      if (ev.action == EventSpec<N>::Action::stop) {
        run.hits.push_back({ev.name, t_hit, tmp});
        if (every_step) record(t_hit, tmp);
        run.end = EndReason::event;
        run.end_event = ev.name;
        run.t_end = t_hit;
        run.x_end = tmp;
        break;
      }
      // switch side and restart exactly on the surface
      if (ev.snap >= 0) tmp[static_cast<std::size_t>(ev.snap)] = 0.0;
      run.hits.push_back({ev.name, t_hit, tmp});
      if (every_step) record(t_hit, tmp);
      side = -side;
      ++run.switches;
      x = tmp;
      dense.initialize(x, t_hit, std::max(1e-8, std::min(tb - ta, dt0)));
      for (std::size_t i = 0; i < events.size(); ++i) g_prev[i] = events[i].g(x);
      continue;
    }

    if (tb >= t_max) {
      dense.calc_state(t_max, tmp);
      if (every_step) record(t_max, tmp);
      run.end = EndReason::time_limit;
      run.t_end = t_max;
      run.x_end = tmp;
      break;
    }
    if (every_step) record(tb, xb);
    g_prev = g_now;
  }
  run.side = side;
  return run;
}

}  // namespace chazy::flow

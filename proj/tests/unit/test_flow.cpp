#include <cmath>
#include <random>

#include "chazy/flow/flow.hpp"
#include "chazy/flow/trap.hpp"
#include "doctest.h"

using namespace chazy::flow;

namespace {

FieldSpec minus(int q, double omega = 1.0) { return {q, Branch::minus, omega}; }

}  // namespace

TEST_CASE("field anchors") {
  for (int q = 1; q <= 6; ++q) {
    CAPTURE(q);
    const auto a = eval_field(minus(q), {1.0, -1.0});
    CHECK(a.du == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(a.dv == doctest::Approx(1.0).epsilon(1e-15));
    const auto b = eval_field(minus(q), {-1.0, 1.0});
    CHECK(b.du == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(b.dv == doctest::Approx(3.0 + 4.0 * q).epsilon(1e-15));
  }
}

TEST_CASE("field rejects bad input") {
  CHECK_THROWS_AS(eval_field({0, Branch::minus, 1.0}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(eval_field({1, Branch::minus, 0.0}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(eval_field(minus(2), {2.0, -1.0}), std::domain_error);
  CHECK(admissible({1.0, -1.0}));
  CHECK_FALSE(admissible({1.0, -1.5}));
}

TEST_CASE("plus and minus fields are point reflections of each other") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int q : {1, 2, 3, 5}) {
    for (int i = 0; i < 200; ++i) {
      const PlanarPoint p{d(rng), d(rng)};
      if (!admissible(p) || p.u == 0.0) continue;
      const auto xp = eval_field({q, Branch::plus, 1.0}, p);
      const auto xm = eval_field(minus(q), {-p.u, -p.v});
      CHECK(xp.du == doctest::Approx(-xm.du).epsilon(1e-13));
      CHECK(xp.dv == doctest::Approx(-xm.dv).epsilon(1e-13));
    }
  }
}

TEST_CASE("planar field scales with omega") {
  // (u, v, t) -> (w^(1/(1+q)) u, w^((1+2q)/(1+q)) v, w^(-q/(1+q)) t)
  for (int q : {1, 2, 3}) {
    for (double w : {0.5, 2.0, 3.0}) {
      const double a = std::pow(w, 1.0 / (1 + q)), c = std::pow(w, (1.0 + 2 * q) / (1 + q));
      const double s = std::pow(w, double(q) / (1 + q));
      for (PlanarPoint p : {PlanarPoint{0.8, -0.5}, PlanarPoint{-1.1, 0.3}, PlanarPoint{1.5, -0.6}}) {
        const auto x1 = eval_field(minus(q), p);
        const auto xw = eval_field(minus(q, w), {a * p.u, c * p.v});
        CHECK(xw.du == doctest::Approx(s * a * x1.du).epsilon(1e-12));
        CHECK(xw.dv == doctest::Approx(s * c * x1.dv).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("transition map lands on the arrival arc") {
  for (int q : {1, 2, 3}) {
    const auto ends = section_ends(q);
    for (int i = 0; i < 20; ++i) {
      const double u0 = ends.u_iD + (ends.u_fD - ends.u_iD) * i / 19.0;
      CAPTURE(q);
      CAPTURE(u0);
      const auto tr = transition_map(q, u0);
      CHECK(tr.residual < 1e-12);
      CHECK(tr.u1 >= ends.u_iI - 1e-9);
      CHECK(tr.u1 <= ends.u_fI + 1e-9);
      CHECK(tr.time > 0.0);
    }
  }
}

TEST_CASE("planar fixed point brackets") {
  for (int q : {1, 2, 3}) {
    CAPTURE(q);
    const auto fp = find_fixed_point(q);
    CHECK(fp.h_at_iD < 0.0);
    CHECK(fp.h_at_fD > 0.0);
    CHECK(std::abs(fp.h_at_star) < 1e-10);
    CHECK(fp.u_star > section_ends(q).u_iD);
    CHECK(fp.u_star < 2.0);
  }
}

TEST_CASE("energy is conserved only with k = q + 1") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  int controls = 0, control_drifts = 0;
  for (int q : {1, 2, 3, 5, 10}) {
    for (int i = 0; i < 20; ++i) {
      const State3 x0{d(rng), d(rng), d(rng)};
      const double h0 = energy(q, x0[0], x0[1], x0[2]);
      std::vector<double> ts;
      for (int j = 1; j <= 100; ++j) ts.push_back(0.5 * j);
      const auto run = integrate_3d(q, q + 1.0, x0, 50.0, {}, {}, ts);
      double drift = 0.0;
      for (const auto& s : run.x) {
        const double scale = 1.0 + std::abs(s[0] * s[2]) + s[1] * s[1] + std::pow(std::abs(s[0]), q + 1) * std::abs(s[1]);
        drift = std::max(drift, std::abs(energy(q, s[0], s[1], s[2]) - h0) / scale);
      }
      CAPTURE(q);
      CAPTURE(i);
      CHECK(drift < 1e-8);

      const auto bad = integrate_3d(q, q, x0, 50.0, {}, {}, ts);
      double bad_drift = 0.0;
      for (const auto& s : bad.x) bad_drift = std::max(bad_drift, std::abs(energy(q, s[0], s[1], s[2]) - h0));
      ++controls;
      if (bad_drift > 1e-4) ++control_drifts;
    }
  }
  // with the wrong coefficient H moves on almost every start
  CHECK(control_drifts >= controls * 9 / 10);
}

TEST_CASE("periodic orbits close and are odd under half a period") {
  for (int q : {1, 2, 3}) {
    const auto sym = find_symmetric_orbit(q);
    CHECK(sym.h_at_iD < 0.0);
    CHECK(sym.h_at_fD > 0.0);
    for (double w : {0.5, 1.0, 2.0}) {
      CAPTURE(q);
      CAPTURE(w);
      const auto orb = lift_orbit(q, w, sym);
      CHECK(orb.closure_error < 1e-6);
      CHECK(orb.symmetry_error < 1e-6);
      CHECK(orb.energy_drift < 1e-8);
      CHECK(orb.curve_deviation < 1e-6);
      CHECK(orb.period == doctest::Approx(orb.period_time_rescaling).epsilon(1e-7));
      CHECK(orb.fold_crossings == 2);
    }
    CHECK(scaling_residual(q, 2.0, sym) < 1e-6);
  }
}

TEST_CASE("closure improves with the tolerance") {
  OdeOptions loose;
  loose.rtol = 1e-6;
  loose.atol = 1e-8;
  OdeOptions tight;
  tight.rtol = 1e-11;
  tight.atol = 1e-13;
  const auto a = lift_orbit(2, 1.0, 200, loose);
  const auto b = lift_orbit(2, 1.0, 200, tight);
  CHECK(b.closure_error < a.closure_error);
  CHECK(b.energy_drift < a.energy_drift);
}

TEST_CASE("symmetric point regression") {
  const auto s = find_symmetric_orbit(2, 1e-12);
  CHECK(s.u_star == doctest::Approx(1.7014007968).epsilon(1e-8));
  CHECK(find_symmetric_orbit(1).u_star == doctest::Approx(1.736714503).epsilon(1e-8));
  CHECK(find_symmetric_orbit(3).u_star == doctest::Approx(1.618042180).epsilon(1e-8));
}

TEST_CASE("planar fixed point does not lift to a closed orbit") {
  for (int q : {1, 2, 3}) {
    const auto chk = planar_lift_check(q, find_fixed_point(q));
    CAPTURE(q);
    CHECK(chk.projection_error < 1e-7);  // the planar flow is the (x, z) shadow
    CHECK(chk.distance > 0.5);
  }
}

TEST_CASE("trap region verdicts") {
  for (int q : {1, 2, 3, 7, 20}) {
    const auto rep = validate_trap_region(q, 500, 1e-2);
    CAPTURE(q);
    CHECK(rep.pass);
    for (const auto& p : rep.pieces) {
      CAPTURE(p.name);
      CHECK(p.ok);
      CHECK(p.samples >= 500);
      CHECK(p.expected == (p.name == "Sigma_I" ? "outward" : "inward"));
    }
    CHECK(rep.pieces.size() == (q <= 3 ? 12u : 7u));
  }
}

TEST_CASE("closed-form pieces match the general ones") {
  for (int q : {1, 2, 3}) {
    const auto rep = validate_trap_region(q, 500, 1e-2);
    for (int i = 0; i < 5; ++i) {
      const auto& u = rep.pieces[2 + static_cast<std::size_t>(i)];
      const auto& r = rep.pieces[7 + static_cast<std::size_t>(i)];
      CAPTURE(r.name);
      CHECK(r.u_lo == doctest::Approx(u.u_lo).epsilon(1e-14));
      CHECK(r.u_hi == doctest::Approx(u.u_hi).epsilon(1e-14));
      CHECK(r.min_abs_margin == doctest::Approx(u.min_abs_margin).epsilon(1e-12));
    }
  }
}

TEST_CASE("trap validation rejects bad arguments") {
  CHECK_THROWS_AS(validate_trap_region(0), std::invalid_argument);
  CHECK_THROWS_AS(validate_trap_region(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(validate_trap_region(2, 500, 0.0), std::invalid_argument);
}

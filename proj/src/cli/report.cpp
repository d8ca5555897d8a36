#include "chazy/cli/report.hpp"

#include <cmath>
#include <cstdio>

namespace chazy::cli {

json to_json(const conditions::ConditionReport& r, bool timing) {
  return {{"q", r.q},
          {"c1_roots", r.c1_roots},
          {"c2_roots", r.c2_roots},
          {"c3_roots", r.c3_roots},
          {"pass", r.pass},
          {"millis", timing ? r.millis : 0.0}};
}

json to_json(const std::vector<conditions::ConditionReport>& rs, bool timing) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(to_json(r, timing));
  return a;
}

json to_json(const flow::TrapReport& r) {
  json pieces = json::array();
  for (const auto& p : r.pieces) {
    pieces.push_back({{"name", p.name},
                      {"expected", p.expected},
                      {"verdict", p.ok ? p.expected : (p.expected == "inward" ? "outward" : "inward")},
                      {"u_lo", p.u_lo},
                      {"u_hi", p.u_hi},
                      {"samples", p.samples},
                      {"violations", p.violations},
                      {"min_abs_margin", p.min_abs_margin},
                      {"worst_u", p.worst_u},
                      {"ok", p.ok}});
  }
  return {{"q", r.q},
          {"samples_per_piece", r.samples_per_piece},
          {"exclusion_radius", r.exclusion_radius},
          {"digits", r.digits},
          {"pieces", pieces},
          {"pass", r.pass}};
}

json appendix_json(const std::vector<conditions::AppendixCheck>& checks,
                   const std::vector<conditions::ResultantCheck>& resultants) {
  json c = json::array(), res = json::array();
  int mismatches = 0;
  for (const auto& k : checks) {
    c.push_back({{"poly", k.poly}, {"what", k.what}, {"expected", k.expected}, {"computed", k.computed}, {"ok", k.ok()}});
    mismatches += !k.ok();
  }
  for (const auto& k : resultants) {
    res.push_back({{"poly", k.poly}, {"expected", k.expected}, {"computed", k.computed}, {"ok", k.ok}});
    mismatches += !k.ok;
  }
  return {{"checks", c}, {"resultants", res}, {"mismatches", mismatches}, {"pass", mismatches == 0}};
}

namespace {

json fixed_point_json(const flow::FixedPoint& f) {
  return {{"u", f.u_star},
          {"t", f.t_star},
          {"h_at_iD", f.h_at_iD},
          {"h_at_fD", f.h_at_fD},
          {"h_at_star", f.h_at_star},
          {"iterations", f.iterations}};
}

}  // namespace

json to_json(const OrbitSummary& s) {
  json orbits = json::array();
  for (std::size_t i = 0; i < s.orbits.size(); ++i) {
    const auto& o = s.orbits[i];
    json j = {{"omega", o.omega},
              {"energy_level", -o.omega * o.omega},
              {"u_star", o.u_star},
              {"t_star", o.t_star},
              {"period", o.period},
              {"period_predicted", o.period_time_rescaling},
              {"period_alt_scaling", o.period_alt_scaling},
              {"period_matches",
               std::abs(o.period - o.period_time_rescaling) <= 1e-6 * o.period ? "time_rescaling"
               : std::abs(o.period - o.period_alt_scaling) <= 1e-6 * o.period ? "alt_scaling"
                                                                            : "neither"},
              {"energy_drift", o.energy_drift},
              {"closure_error", o.closure_error},
              {"curve_deviation", o.curve_deviation},
              {"symmetry_error", o.symmetry_error},
              {"sheet_error", o.sheet_error},
              {"fold_crossings", o.fold_crossings},
              {"x_zero_times", o.x_zero_times},
              {"samples", o.curve.size()}};
    if (i < s.csv_paths.size()) j["csv"] = s.csv_paths[i];
    orbits.push_back(j);
  }
  return {{"q", s.q},
          {"symmetric_point", fixed_point_json(s.symmetric)},
          {"planar_fixed_point", fixed_point_json(s.planar)},
          {"planar_lift_distance", s.planar_lift.distance},
          {"orbits", orbits},
          {"closure_tol", s.closure_tol},
          {"drift_tol", s.drift_tol},
          {"pass", s.pass}};
}

void write_orbit_csv(std::ostream& os, const flow::OrbitResult& r) {
  os << "t,x,y,z,H\n";
  char buf[160];
  for (const auto& c : r.curve) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", c.t, c.x, c.y, c.z,
                  flow::energy(r.q, c.x, c.y, c.z));
    os << buf;
  }
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace chazy::cli

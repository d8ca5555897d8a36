#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "chazy/conditions/conditions.hpp"
#include "chazy/flow/flow.hpp"
#include "chazy/flow/trap.hpp"

namespace chazy::cli {

using nlohmann::json;

// timing = false writes millis as 0 so that repeated runs are byte-identical
json to_json(const conditions::ConditionReport& r, bool timing = true);
json to_json(const std::vector<conditions::ConditionReport>& rs, bool timing = true);
json to_json(const flow::TrapReport& r);
json appendix_json(const std::vector<conditions::AppendixCheck>& checks,
                   const std::vector<conditions::ResultantCheck>& resultants);

struct OrbitSummary {
  int q = 0;
  flow::FixedPoint symmetric;
  flow::FixedPoint planar;  // planar transition map fixed point
  flow::PlanarLiftCheck planar_lift;
  std::vector<flow::OrbitResult> orbits;
  std::vector<std::string> csv_paths;  // parallel to orbits, may be empty
  double closure_tol = 1e-6;
  double drift_tol = 1e-8;
  bool pass = false;
};
json to_json(const OrbitSummary& s);

/// Header t,x,y,z,H then one row per curve point, 17 significant digits.
void write_orbit_csv(std::ostream& os, const flow::OrbitResult& r);

/// The textual form used for every report: two-space indent, trailing newline.
std::string render(const json& j);

}  // namespace chazy::cli

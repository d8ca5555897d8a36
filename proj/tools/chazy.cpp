// chazy: condition checks, orbits and trap regions for the generalized Chazy
// equation with k = q + 1.
//
// exit codes: 0 pass, 1 condition or validation failure, 2 usage or internal error

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chazy/cli/report.hpp"

namespace {

using namespace chazy;
using cli::json;

struct Output {
  std::string path;  // empty: stdout

  void emit(const json& j) const {
    const std::string text = cli::render(j);
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
  }
};

// foo.csv -> foo_w0.5.csv when several omegas share one path
std::string csv_path_for(const std::string& base, double omega, bool several) {
  if (!several) return base;
  char w[32];
  std::snprintf(w, sizeof w, "_w%g", omega);
  const auto dot = base.find_last_of('.');
  const auto slash = base.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return base + w;
  return base.substr(0, dot) + w + base.substr(dot);
}

int run_orbit(int q, const std::vector<double>& omegas, int samples, const flow::OdeOptions& opt,
              double bisect_tol, const std::string& csv, const Output& out) {
  const auto cond = conditions::check_conditions(q);
  if (!cond.pass) {
    std::cerr << "orbit: conditions fail for q = " << q << ", no orbit is certified\n";
    return 1;
  }
  cli::OrbitSummary s;
  s.q = q;
  try {
    s.symmetric = flow::find_symmetric_orbit(q, bisect_tol, opt);
    s.planar = flow::find_fixed_point(q, bisect_tol, opt);
  } catch (const flow::BracketError& e) {
    std::cerr << "orbit: " << e.what() << "\n";
    return 1;
  }
  s.planar_lift = flow::planar_lift_check(q, s.planar, opt);
  s.pass = true;
  for (double w : omegas) {
    auto r = flow::lift_orbit(q, w, s.symmetric, samples, opt);
    for (double t : r.x_zero_times) {
      std::cerr << "orbit q=" << q << " omega=" << w << ": crossed x = 0 at t = " << t
                << (q == 1 ? " (|x|^q/x jumps here)" : "") << "\n";
    }
    if (!csv.empty()) {
      const auto path = csv_path_for(csv, w, omegas.size() > 1);
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + path);
      cli::write_orbit_csv(f, r);
      s.csv_paths.push_back(path);
    }
    s.pass = s.pass && r.closure_error < s.closure_tol && r.energy_drift < s.drift_tol;
    s.orbits.push_back(std::move(r));
  }
  out.emit(cli::to_json(s));
  return s.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chazy k = q + 1 toolkit: exact condition checks, periodic orbits, trap regions"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  bool no_timing = false;
  app.add_option("-o,--output", out.path, "write the JSON report here instead of stdout");
  app.add_flag("--no-timing", no_timing, "report millis as 0 so output is byte-identical across runs");

  int q = 1;
  auto* check = app.add_subcommand("check", "certify C1, C2, C3 for one q");
  check->add_option("--q", q, "exponent q")->required()->check(CLI::Range(1, 100000));

  int q_min = 1, q_max = 100, jobs = 1;
  auto* scan = app.add_subcommand("scan", "certify C1, C2, C3 for a range of q");
  scan->add_option("--q-min", q_min, "first q")->capture_default_str()->check(CLI::Range(1, 100000));
  scan->add_option("--q-max", q_max, "last q")->capture_default_str()->check(CLI::Range(1, 100000));
  scan->add_option("--jobs", jobs, "worker threads, 0 for all cores")->capture_default_str()->check(CLI::NonNegativeNumber);

  std::vector<double> omegas{1.0};
  int samples = 400;
  flow::OdeOptions opt;
  double bisect_tol = 1e-10;
  std::string csv;
  auto* orbit = app.add_subcommand("orbit", "construct periodic orbits on H = -omega^2");
  orbit->add_option("--q", q, "exponent q")->required()->check(CLI::Range(1, 100000));
  orbit->add_option("--omega", omegas, "one or more omega values, comma separated")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  orbit->add_option("--samples", samples, "curve points per period")->capture_default_str()->check(CLI::Range(4, 10000000));
  orbit->add_option("--rtol", opt.rtol, "integrator relative tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  orbit->add_option("--atol", opt.atol, "integrator absolute tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  orbit->add_option("--event-tol", opt.event_tol, "event location tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  orbit->add_option("--bisect-tol", bisect_tol, "shooting bisection tolerance on h")->capture_default_str()->check(CLI::PositiveNumber);
  orbit->add_option("--csv", csv, "orbit samples t,x,y,z,H; with several omegas _w<omega> is added to the name");

  int trap_samples = 500;
  double radius = 1e-2;
  auto* trap = app.add_subcommand("trap", "sample the trapping-region boundary against the minus field");
  trap->add_option("--q", q, "exponent q")->required()->check(CLI::Range(1, 100000));
  trap->add_option("--samples", trap_samples, "samples per boundary piece")->capture_default_str()->check(CLI::Range(2, 100000000));
  trap->add_option("--radius", radius, "exclusion radius around u = 0")->capture_default_str()->check(CLI::Range(1e-12, 0.5));

  auto* appendix = app.add_subcommand("appendix", "recount the q = 1, 2, 3 polynomials against the published values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const bool timing = !no_timing;
    if (*check) {
      const auto r = conditions::check_conditions(q);
      out.emit(cli::to_json(r, timing));
      return r.pass ? 0 : 1;
    }
    if (*scan) {
      if (q_min > q_max) {
        std::cerr << "scan: --q-min must not exceed --q-max\n";
        return 2;
      }
      const auto rs = conditions::scan(q_min, q_max, jobs);
      out.emit(cli::to_json(rs, timing));
      bool all = true;
      for (const auto& r : rs) all = all && r.pass;
      return all ? 0 : 1;
    }
    if (*orbit) return run_orbit(q, omegas, samples, opt, bisect_tol, csv, out);
    if (*trap) {
      const auto r = flow::validate_trap_region(q, trap_samples, radius);
      out.emit(cli::to_json(r));
      return r.pass ? 0 : 1;
    }
    if (*appendix) {
      const auto j = cli::appendix_json(conditions::appendix_regression(), conditions::appendix_resultants());
      out.emit(j);
      return j["pass"].get<bool>() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chazy/flow/field.hpp"
#include "chazy/flow/ode.hpp"

namespace chazy::flow {

/// Raised when an integration runs out of budget or leaves the region the
/// construction relies on.
struct FlowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when h does not change sign on the section endpoints.
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EndTag { hyperbola, time_limit, step_limit };

struct Trajectory {
  std::vector<double> t;
  std::vector<PlanarPoint> p;
  EndTag end = EndTag::time_limit;
  double t_end = 0.0;
  PlanarPoint p_end;
  int u_zero_crossings = 0;
  long steps = 0;
};

/// Planar flow from p0 until uv + omega^2 drops through zero, t_max or the step
/// budget. u = 0 crossings restart the integration on the other side.
/// sample_times, when given, are the recorded times.
Trajectory integrate(const FieldSpec& spec, const PlanarPoint& p0, double t_max, const OdeOptions& opt = {},
                     const std::vector<double>& sample_times = {});

struct SectionEnds {
  int q = 0;
  double u_iD = 0.0, u_fD = 2.0;  // departure arc
  double u_iI = 0.0, u_fI = 0.0;  // arrival arc
};
SectionEnds section_ends(int q);

struct Transition {
  double u0 = 0.0;
  double u1 = 0.0;  // abscissa on the arrival branch
  double v1 = 0.0;
  double time = 0.0;
  int u_zero_crossings = 0;
  double residual = 0.0;  // |uv + 1| at the located crossing
};

/// Minus flow from (u0, -1/u0) to the first crossing of uv + 1 = 0 with u < 0.
Transition transition_map(int q, double u0, const OdeOptions& opt = {});

struct FixedPoint {
  double u_star = 0.0;
  double t_star = 0.0;
  double h_at_iD = 0.0;  // h at the left end, expected < 0
  double h_at_fD = 0.0;  // h at the right end, expected > 0
  double h_at_star = 0.0;
  int iterations = 0;
};

/// Bisection on h(u) = P(u) + u over [u_iD, u_fD] for the planar transition map.
FixedPoint find_fixed_point(int q, double h_tol = 1e-10, const OdeOptions& opt = {});

// ---- 3D system -------------------------------------------------------------

using State3 = State<3>;

struct Trajectory3 {
  std::vector<double> t;
  std::vector<State3> x;
  std::vector<EventHit<3>> y_zero;  // recorded y = 0 crossings
  EndTag end = EndTag::time_limit;  // hyperbola is unused here
  double t_end = 0.0;
  State3 x_end{};
  int x_zero_crossings = 0;
  std::vector<double> x_zero_times;
  bool stopped_on_return = false;
};

struct Stop3 {
  // stop at the first y = 0 crossing in this direction (0: never stop)
  int y_direction = 0;
  int x_sign = 0;  // required sign of x at that crossing, 0 for any
};

/// x' = y, y' = z, z' = -|x|^q z - k |x|^q / x y^2. x = 0 is a switching surface
/// as in the planar case.
Trajectory3 integrate_3d(int q, double k, const State3& x0, double t_max, const OdeOptions& opt = {},
                         Stop3 stop = {}, const std::vector<double>& sample_times = {});

/// Half return on the level H = -1 that follows the orbit across the fold of
/// the two sheets: from (u0, 0, -1/u0) to the next y = 0 crossing with x < 0.
struct HalfReturn {
  double u0 = 0.0;
  double x1 = 0.0;
  double z1 = 0.0;
  double time = 0.0;
  int x_zero_crossings = 0;
};
HalfReturn half_return_map(int q, double u0, const OdeOptions& opt = {});

/// Symmetric point of the half return: x1(u) + u = 0 on [u_iD, u_fD].
FixedPoint find_symmetric_orbit(int q, double h_tol = 1e-10, const OdeOptions& opt = {});

// ---- periodic orbits ---------------------------------------------------------

struct CurvePoint {
  double t, x, y, z;
};

struct OrbitResult {
  int q = 0;
  double omega = 1.0;
  double u_star = 0.0;  // rescaled departure abscissa
  double t_star = 0.0;  // rescaled half period
  double period = 0.0;  // first return time of the direct 3D integration
  std::vector<CurvePoint> curve;  // one period, built from the rescaled half orbit
  double energy_drift = 0.0;  // max |H + omega^2| / omega^2 over curve and direct run
  double closure_error = 0.0;  // |phi(period, p0) - p0|
  double curve_deviation = 0.0;  // max distance curve vs direct integration
  double symmetry_error = 0.0;  // max |phi(t + T/2) + phi(t)|
  double sheet_error = 0.0;  // max |y - f(x, z)| over the curve
  double period_time_rescaling = 0.0;  // 2 t* omega^(-q/(1+q))
  double period_alt_scaling = 0.0;  // 2 t* omega^((1+q)/q)
  int fold_crossings = 0;  // sheet changes along the curve
  int x_zero_crossings = 0;
  std::vector<double> x_zero_times;  // crossings of x = 0 in the direct run
  FixedPoint bracket;  // half-return bisection data
};

/// Builds the orbit on H = -omega^2 from the symmetric point at omega = 1 and
/// the scaling (x, y, z, t) -> (w^(1/(1+q)) x, w y, w^((1+2q)/(1+q)) z, w^(-q/(1+q)) t),
/// and checks it against direct integration at omega.
OrbitResult lift_orbit(int q, double omega, int samples = 400, const OdeOptions& opt = {});
OrbitResult lift_orbit(int q, double omega, const FixedPoint& symmetric, int samples = 400,
                       const OdeOptions& opt = {});

/// Max over a period of |phi_omega(t, W p) - W phi_1(omega^(q/(1+q)) t, p)|
/// for p the symmetric point, W the scaling above.
double scaling_residual(int q, double omega, const FixedPoint& symmetric, int samples = 200,
                        const OdeOptions& opt = {});

/// Where the 3D flow from the lifted planar point (u, 0, -1/u) is at the
/// planar crossing time t, against the point (-u, 0, 1/u) the planar
/// construction expects.
struct PlanarLiftCheck {
  double u = 0.0;
  double t = 0.0;
  State3 reached{};
  double distance = 0.0;
  double projection_error = 0.0;  // (x, z) against the planar flow
};
PlanarLiftCheck planar_lift_check(int q, const FixedPoint& planar, const OdeOptions& opt = {});

}  // namespace chazy::flow

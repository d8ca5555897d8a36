#pragma once

#include <array>
#include <cmath>

namespace chazy::flow {

enum class Branch { plus = 1, minus = -1 };

struct PlanarPoint {
  double u = 0.0;
  double v = 0.0;
};

struct FieldSpec {
  int q = 1;
  Branch branch = Branch::minus;
  double omega = 1.0;  // level H = -omega^2; 1 gives the rescaled fields
};

struct Velocity {
  double du = 0.0;
  double dv = 0.0;
};

/// |u|^q / u written as s |u|^(q-1). side picks s where u is zero or sits on
/// the wrong side by rounding right after a switch; side = 0 means sign(u).
template <class Real>
Real signed_factor(int q, const Real& u, int side) {
  using std::abs;
  using std::pow;
  int s = side;
  if (s == 0) s = (u > 0) - (u < 0);
  if (s == 0) return Real(0);
  const Real a = abs(u);
  Real p = (q == 1) ? Real(1) : pow(a, q - 1);
  return s > 0 ? p : Real(-p);
}

/// The reduced planar fields on the level -omega^2. The radicand is clamped
/// at zero so integrator stages that overshoot the fold stay finite.
template <class Real>
std::array<Real, 2> planar_field(int q, int branch, const Real& omega, const Real& u, const Real& v, int side) {
  using std::abs;
  using std::pow;
  using std::sqrt;
  const Real au = abs(u);
  const Real up = (q == 1) ? Real(au) : Real(pow(au, q));
  Real rad = pow(au, 2 * (1 + q)) + 2 * u * v + 2 * omega * omega;
  if (rad < 0) rad = 0;
  const Real du = u * up + Real(branch) * sqrt(rad);
  const Real dv = signed_factor(q, u, side) * (-u * v - Real(q + 1) * du * du);
  return {du, dv};
}

/// uv + omega^2 >= -tol
bool admissible(const PlanarPoint& p, double omega = 1.0, double tol = 0.0);

/// Throws std::invalid_argument for q < 1 or omega <= 0, std::domain_error
/// for an inadmissible point. At u = 0 the q = 1 factor uses the left value,
/// the side the minus flow moves into.
Velocity eval_field(const FieldSpec& spec, const PlanarPoint& p);

/// H = xz - y^2/2 + |x|^q x y
double energy(int q, double x, double y, double z);

/// y on the sheet sign (+1 or -1) over (x, z) at level -omega^2
double sheet_y(int q, int sign, double omega, double x, double z);

}  // namespace chazy::flow

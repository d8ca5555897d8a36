#pragma once

#include <string>
#include <vector>

namespace chazy::flow {

struct PieceReport {
  std::string name;
  std::string expected;  // "inward" or "outward"
  double u_lo = 0.0;  // sampled range, after the exclusion around u = 0
  double u_hi = 0.0;
  int samples = 0;
  int violations = 0;
  double min_abs_margin = 0.0;  // smallest |<grad g, X>| seen
  double worst_u = 0.0;  // abscissa of the smallest margin or of the first violation
  bool ok = false;
};

struct TrapReport {
  int q = 0;
  int samples_per_piece = 0;
  double exclusion_radius = 0.0;
  unsigned digits = 0;  // working precision in decimal digits
  std::vector<PieceReport> pieces;
  bool pass = false;
};

/// Samples every boundary piece of the trapping region for the minus field:
/// the arcs Sigma_D, Sigma_I and U1..U5 for any q, plus the R, S or T pieces
/// with their closed-form constants when q is 1, 2 or 3. Pieces that reach
/// u = 0 are sampled on |u| >= exclusion_radius, where the contact with the
/// field is a tangency. The sign of <grad g, X> is evaluated in MPFR with a
/// precision that grows with q.
TrapReport validate_trap_region(int q, int samples_per_piece = 500, double exclusion_radius = 1e-2);

}  // namespace chazy::flow

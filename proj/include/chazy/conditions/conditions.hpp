#pragma once

#include <map>
#include <string>
#include <vector>

#include "chazy/algebraic/alg_poly.hpp"
#include "chazy/exact/rat_poly.hpp"
#include "chazy/sturm/sturm.hpp"

namespace chazy::conditions {

using algebraic::AlgebraicNumber;
using algebraic::AlgPoly;
using algebraic::FieldPtr;
using exact::BigRational;
using exact::RatPoly;

struct ChazyParams {
  int q;
  int k;
  FieldPtr field;

  /// Throws std::invalid_argument for q < 1.
  explicit ChazyParams(int q);
};

/// Integer polynomial of degree 2(1+2q); the u^(2(q-1)) term folds into the
/// constant when q = 1.
RatPoly gen_P0(int q);

/// P+ and P- with every coefficient c * gamma^e, gamma the Chazy radical.
AlgPoly gen_Pplus(const ChazyParams& p);
AlgPoly gen_Pminus(const ChazyParams& p);

/// -q - (1+q) gamma x + gamma^(q+1) x^(q+1), whose positive root is x_iI.
AlgPoly gen_lemma_poly(const ChazyParams& p);

/// Q in Q[w] with P(w/gamma) = gamma^residue Q(w). Every term c gamma^k u^j
/// must satisfy k - j = residue (mod N); otherwise std::logic_error.
RatPoly rationalize(const AlgPoly& poly, int residue);

RatPoly gen_Qplus(const ChazyParams& p);   // residue 1
RatPoly gen_Qminus(const ChazyParams& p);  // residue 1
RatPoly gen_lemma_rational(const ChazyParams& p);  // residue 0

struct ConditionReport {
  int q = 0;
  int c1_roots = 0;  // distinct roots of P0 in (2, (1+4q)/(2q))
  int c2_roots = 0;  // roots of P+ in (0, u_iD), with multiplicity
  int c3_roots = 0;  // roots of P- in (-2, 0), with multiplicity
  bool pass = false;
  double millis = 0.0;
};

ConditionReport check_conditions(int q);

/// Reports ordered by q. jobs <= 0 uses the hardware concurrency.
/// Throws std::invalid_argument unless 1 <= q_min <= q_max.
std::vector<ConditionReport> scan(int q_min, int q_max, int jobs = 1);

struct Endpoints {
  int q = 0;
  AlgebraicNumber u_iD;  // 1/gamma
  double u_iD_float = 0.0;
  BigRational u_fD;  // 2
  double u_fI = 0.0;  // -q^(1/(q+1)) / gamma, float only
  algebraic::RationalInterval x_iI;  // certified enclosure of the positive root
  double x_iI_float = 0.0;
  double u_iI = 0.0;  // -x_iI
  int positive_roots = 0;
  int descartes_sign_changes = 0;
};

/// Certifies the endpoint polynomial: exactly one positive root x_iI and x_iI < 2. Throws
/// std::runtime_error if either check fails. bits sets the enclosure width.
Endpoints isolate_endpoint(int q, unsigned long bits = 64);

/// The published q = 1, 2, 3 polynomials, transcribed with constants written as rational
/// multiples of gamma powers.
struct AppendixPolys {
  FieldPtr field;
  std::map<std::string, AlgPoly> polys;
};
/// Throws std::invalid_argument unless q is 1, 2 or 3.
AppendixPolys gen_appendix_polys(int q);

struct AppendixCheck {
  std::string poly;
  std::string what;  // e.g. "roots on (0, inf)" or "V(0)"
  long expected = 0;
  long computed = 0;
  bool ok() const { return expected == computed; }
};

/// Root counts, sign-variation values and resultant checks against the
/// published numbers.
std::vector<AppendixCheck> appendix_regression();

struct ResultantCheck {
  std::string poly;
  std::string expected;
  std::string computed;
  bool ok = false;
};
std::vector<ResultantCheck> appendix_resultants();

}  // namespace chazy::conditions

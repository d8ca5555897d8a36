#pragma once

// Literal transcriptions of the published q = 1, 2, 3 polynomials, kept apart
// from the generators under test.

#include "chazy/algebraic/alg_poly.hpp"
#include "chazy/exact/rat_poly.hpp"

namespace fixtures {

using chazy::algebraic::AlgPoly;
using chazy::algebraic::FieldPtr;
using chazy::exact::RatPoly;

// gamma = 2^(3/4), 18^(1/6), 2^(5/8)
FieldPtr field_q1();
FieldPtr field_q2();
FieldPtr field_q3();

RatPoly p0();
RatPoly p6();
RatPoly p10();

AlgPoly p3();
AlgPoly p4();
AlgPoly p8();
AlgPoly p13();
AlgPoly p14();

}  // namespace fixtures

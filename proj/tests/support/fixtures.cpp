#include "fixtures.hpp"

#include "chazy/algebraic/radical_field.hpp"

namespace fixtures {

using chazy::algebraic::RadicalField;
using chazy::exact::BigRational;
using T = AlgPoly::Term;

FieldPtr field_q1() {
  static const FieldPtr f = RadicalField::make(4, 8);
  return f;
}
FieldPtr field_q2() {
  static const FieldPtr f = RadicalField::make(6, 18);
  return f;
}
FieldPtr field_q3() {
  static const FieldPtr f = RadicalField::make(8, 32);
  return f;
}

RatPoly p0() {
  return RatPoly({-14, 95, BigRational(-745, 4), 110, -19, 20, -8});
}

RatPoly p6() {
  return RatPoly({32, -144, -80, 1512, -4545, 3168, -624, 0, 0, 216, -96});
}

RatPoly p10() {
  return RatPoly({72, -468, 216, 0, -256, 3744, -15225, 11544, -2412, 0, 0, 0, 0, 416, -192});
}

// q=1: 2^(3/4) = g, sqrt2 = g^2/2, 2^(1/4) = g^3/4
AlgPoly p3() {
  return AlgPoly::from_terms(field_q1(), {T{12, 1, 0}, T{-29, 2, 1}, T{22, 3, 2}, T{-38, 0, 3},
                                          T{4, 1, 4}, T{-2, 2, 5}});
}

AlgPoly p4() {
  return AlgPoly::from_terms(field_q1(), {T{12, 1, 0}, T{-21, 2, 1}, T{-22, 3, 2}, T{-38, 0, 3},
                                          T{4, 1, 4}, T{2, 2, 5}});
}

// q=2: 2^(1/6) 3^(1/3) = g, 2^(1/3) 3^(2/3) = g^2, sqrt2 = g^3/3, 2^(2/3) 3^(1/3) = g^4/3
AlgPoly p8() {
  return AlgPoly::from_terms(field_q2(), {T{32, 1, 0}, T{-49, 2, 1}, T{BigRational(-16, 3), 3, 2},
                                          T{26, 4, 3}, T{-58, 0, 5}, T{8, 1, 6},
                                          T{BigRational(-8, 3), 3, 8}});
}

// q=3: 2^(5/8) = g, 2^(1/4) = g^2/2, sqrt2 = g^4/4, 2^(1/8) = g^5/8
AlgPoly p13() {
  return AlgPoly::from_terms(field_q3(), {T{20, 1, 0}, T{-27, 2, 1}, T{-2, 4, 3}, T{10, 5, 4},
                                          T{-26, 0, 7}, T{4, 1, 8}, T{-1, 4, 11}});
}

AlgPoly p14() {
  return AlgPoly::from_terms(field_q3(), {T{20, 1, 0}, T{-27, 2, 1}, T{2, 4, 3}, T{-10, 5, 4},
                                          T{-26, 0, 7}, T{4, 1, 8}, T{1, 4, 11}});
}

}  // namespace fixtures

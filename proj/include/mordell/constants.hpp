#pragma once
// Per-curve explicit constants: the seven height-comparison constants,
// h_Weier, the main theorem constants C1/C2/C3, the arithmetic-Bezout
// constant, and the dimension-dependent constant C0(N).

#include "mordell/ec.hpp"
#include "mordell/heights.hpp"
#include "mordell/real.hpp"

namespace mordell {

struct ConstantTable {
  RealUB c1, c2, c3, c4, c5, c6, c7;
  RealUB hWE;
  bool rational_points = true;  // Q-sharp column applied where available
};

struct TheoremConstants {
  RealUB C1;  // fixed literal 72.251
  RealUB C2;  // C1 (6.019 + 4 c1)
  RealUB C3;  // 4 c2
};

ConstantTable table1(const EllipticCurveQ& E, bool rational_points);
TheoremConstants theorem_constants(const EllipticCurveQ& E,
                                   bool rational_points);
// Variant with caller-supplied replacements for c1, c2 (intrinsic route).
TheoremConstants theorem_constants_override(const RealUB& d1, const RealUB& d2);

// Double sum 1/(2(i+j+1)) over 0<=i<=d1, 0<=j<=d2, plus (m-(d1+d2)/2) log 2.
RealUB bezout_c0(long d1, long d2, long m);

// (3^N - 3/2) log 2 + sum_{i=1}^{N-1} 1/i - 1/(2N), N >= 2.
RealUB c0_of_N(int N);

}  // namespace mordell

#pragma once
// Explicit height upper bounds for rational points on curves in E^N, the
// family specializations with their search boxes, and the genus-2 index
// bounds.

#include <gmpxx.h>

#include <string>

#include "mordell/constants.hpp"
#include "mordell/families.hpp"
#include "mordell/real.hpp"

namespace mordell {

struct BoundReport {
  RealUB hhat_upper;
  mpz_class a_box = 0;  // bound on |a| (0 when not applicable)
  mpz_class b_box = 0;  // bound on |b|
  ConstantTable constants;
  TheoremConstants theorem;
  std::string formula_id;
};

// hhat(P) <= C1 h2C degC + C2 degC^2 + C3 on a transverse curve in E^2.
RealUB bound_E2(const EllipticCurveQ& E, const RealUB& h2C, long degC,
                bool rational_points);
// Same shape with caller-supplied d1, d2 replacing c1, c2.
RealUB bound_E2_intrinsic(const RealUB& h2C, long degC, const RealUB& d1,
                          const RealUB& d2);

enum class ENCase { General, WeakTransverse, Transverse };
RealUB bound_EN(const EllipticCurveQ& E, const RealUB& h2C, long degC, int N,
                ENCase c, bool rational_points = true);

BoundReport bound_poly(const EllipticCurveQ& E, const IntPoly& p,
                       const RealLB& hhat_g_lower);
BoundReport bound_Cn(const EllipticCurveQ& E, unsigned n,
                     const RealLB& hhat_g_lower);
BoundReport bound_Dn(const EllipticCurveQ& E, unsigned n,
                     const RealLB& hhat_g_lower);

enum class ProductCase { ARankOnePoint, BRankZeroFactor, CRankOneRational };
// h2 bound for a point of the stated kind on C inside a product with an
// abelian subvariety A; C0 defaults to bezout_c0(1, dimA, ambient_m).
RealUB bound_product_abelian(const EllipticCurveQ& E, long degC,
                             const RealUB& h2C, long degA, const RealUB& h2A,
                             int dimA, ProductCase c, long ambient_m = 8);

// #C(Q) <= 16 degA degC for a rank-zero factor.
long rank0_count_bound(long degA, long degC);

// Genus-2 family index bounds (general route and the Kulesz-style route).
// Both are the integer parts of the printed square-root expressions.
struct DemjanenkoBounds {
  mpz_class general;
  mpz_class kulesz;
};
DemjanenkoBounds demjanenko_bounds(const mpz_class& a, const mpz_class& b,
                                   const RealLB& hhat_P0, const RealUB& c3E);

}  // namespace mordell

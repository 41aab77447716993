#include "mordell/bounds.hpp"

namespace mordell {

namespace {

const char* kC1Literal = "72.251";
const char* kFamilyFactor = "1300.518";  // 18 * 72.251

void require_positive_height(const RealLB& hg) {
  if (!(hg.value() > 0))
    throw NonpositiveGeneratorHeight("generator height lower bound <= 0");
}

// Shared core: hhat <= 1300.518 (2n+3)^2 (per_factor + 3.01 + 2 c1) + 4 c2.
RealUB family_hhat(const ConstantTable& t, long n, const RealUB& per_factor) {
  RealUB inner =
      per_factor + RealUB::decimal("3.01") + t.c1.scale(mpq_class(2));
  mpq_class sq((2 * n + 3) * (2 * n + 3));
  return RealUB::decimal(kFamilyFactor) * inner.scale(sq) +
         t.c2.scale(mpq_class(4));
}

mpz_class box_ceil(const RealUB& numerator, const RealLB& denom) {
  return ceil_of(sqrt_ub(numerator / denom));
}

}  // namespace

RealUB bound_E2(const EllipticCurveQ& E, const RealUB& h2C, long degC,
                bool rational_points) {
  if (degC < 1) throw InvalidDimension("bound_E2: degC >= 1 required");
  TheoremConstants tc = theorem_constants(E, rational_points);
  return tc.C1 * h2C.scale(mpq_class(degC)) +
         tc.C2.scale(mpq_class(degC) * degC) + tc.C3;
}

RealUB bound_E2_intrinsic(const RealUB& h2C, long degC, const RealUB& d1,
                          const RealUB& d2) {
  if (degC < 1) throw InvalidDimension("bound_E2: degC >= 1 required");
  TheoremConstants tc = theorem_constants_override(d1, d2);
  return tc.C1 * h2C.scale(mpq_class(degC)) +
         tc.C2.scale(mpq_class(degC) * degC) + tc.C3;
}

RealUB bound_EN(const EllipticCurveQ& E, const RealUB& h2C, long degC, int N,
                ENCase c, bool rational_points) {
  if (N < 3) throw InvalidDimension("bound_EN: N >= 3 required");
  if (degC < 1) throw InvalidDimension("bound_EN: degC >= 1 required");
  ConstantTable t = table1(E, rational_points);
  TheoremConstants tc = theorem_constants(E, rational_points);
  mpq_class d(degC);
  switch (c) {
    case ENCase::Transverse:
      return tc.C1 * h2C.scale(mpq_class(N) * d) +
             tc.C2.scale(mpq_class(N, 2) * d * d) + tc.C3.scale(mpq_class(N, 2));
    case ENCase::WeakTransverse:
      return tc.C1 * h2C.scale(mpq_class(4 * (N - 1)) * d) +
             tc.C2.scale(mpq_class(N - 1) * d * d) +
             tc.C3.scale(mpq_class(N) * N);
    case ENCase::General: {
      mpz_class p3 = 1, factN = 1, factN2 = 1;
      for (int i = 0; i < N - 2; ++i) p3 *= 3;
      for (int i = 2; i <= N; ++i) factN *= i;
      for (int i = 2; i <= N - 2; ++i) factN2 *= i;
      RealUB term1 = tc.C1 * h2C.scale(mpq_class(2 * p3 * factN) * d * d);
      RealUB term2 = tc.C2.scale(mpq_class(p3 * factN, 2) * d * d * d);
      RealUB term3 = h2C.scale(mpq_class(p3 * factN2));
      RealUB inner = (tc.C3.scale(mpq_class(1, 2)) + t.c1)
                         .scale(mpq_class(N) * (N - 1)) +
                     c0_of_N(N);
      RealUB term4 = inner.scale(mpq_class(p3 * factN2) * d);
      RealUB term5 = t.c2.scale(mpq_class(N));
      return term1 + term2 + term3 + term4 + term5;
    }
  }
  throw InvalidDimension("bound_EN: unknown case");
}

BoundReport bound_poly(const EllipticCurveQ& E, const IntPoly& p,
                       const RealLB& hhat_g_lower) {
  if (p.degree() < 1) throw ConstantPolynomial("bound_poly: constant p");
  require_positive_height(hhat_g_lower);
  BoundReport r;
  r.constants = table1(E, true);
  r.theorem = theorem_constants(E, true);
  r.formula_id = "family_poly";
  mpz_class mx = p.max_abs_coeff();
  RealUB hWp = mx <= 1 ? RealUB::exact(0L) : log_ub(mpq_class(mx));
  long m = static_cast<long>(p.nonzero_count());
  RealUB logm = m <= 1 ? RealUB::exact(0L) : log_ub(mpq_class(m));
  RealUB per_factor = hWp + logm + r.constants.c6.scale(mpq_class(2));
  r.hhat_upper = family_hhat(r.constants, p.degree(), per_factor);
  r.a_box = box_ceil(r.hhat_upper, hhat_g_lower);
  r.b_box = r.a_box;
  return r;
}

BoundReport bound_Cn(const EllipticCurveQ& E, unsigned n,
                     const RealLB& hhat_g_lower) {
  if (n < 1) throw ConstantPolynomial("bound_Cn: n >= 1 required");
  require_positive_height(hhat_g_lower);
  BoundReport r;
  r.constants = table1(E, true);
  r.theorem = theorem_constants(E, true);
  r.formula_id = "family_power";
  RealUB per_factor = r.constants.c6.scale(mpq_class(2));
  r.hhat_upper = family_hhat(r.constants, n, per_factor);
  // sharpened boxes: |a|^2 <= (3 hhat + 3 c5 + 6n c3) / ((2n+3) hhat(g)),
  //                  |b|^2 <= (2n hhat + 6n c4 + 9 c3 + 3 c7) / ((2n+3) hhat(g))
  const ConstantTable& t = r.constants;
  RealUB num_a = r.hhat_upper.scale(mpq_class(3)) + t.c5.scale(mpq_class(3)) +
                 t.c3.scale(mpq_class(6) * n);
  RealUB num_b = r.hhat_upper.scale(mpq_class(2) * n) +
                 t.c4.scale(mpq_class(6) * n) + t.c3.scale(mpq_class(9)) +
                 t.c7.scale(mpq_class(3));
  RealLB denom = hhat_g_lower.scale(mpq_class(2 * n + 3));
  r.a_box = box_ceil(num_a, denom);
  r.b_box = box_ceil(num_b, denom);
  return r;
}

BoundReport bound_Dn(const EllipticCurveQ& E, unsigned n,
                     const RealLB& hhat_g_lower) {
  if (n < 1) throw ConstantPolynomial("bound_Dn: n >= 1 required");
  require_positive_height(hhat_g_lower);
  BoundReport r;
  r.constants = table1(E, true);
  r.theorem = theorem_constants(E, true);
  r.formula_id = "family_cyclotomic";
  auto [phi, omega2, mu] = phi_omega2_mu(n);
  (void)mu;
  // two printed height routes for the cyclotomic coefficient term: the
  // root-of-unity bound 2^{omega2} log 2 and the generic h_W(p) + log m;
  // use the smaller.
  mpz_class two_pow = mpz_class(1) << omega2;
  RealUB route1 = log2_const_ub().scale(mpq_class(two_pow));
  IntPoly p = cyclotomic(n);
  mpz_class mx = p.max_abs_coeff();
  RealUB hWp = mx <= 1 ? RealUB::exact(0L) : log_ub(mpq_class(mx));
  long m = static_cast<long>(p.nonzero_count());
  RealUB logm = m <= 1 ? RealUB::exact(0L) : log_ub(mpq_class(m));
  RealUB route2 = hWp + logm;
  RealUB per_factor = min(route1, route2) + r.constants.c6.scale(mpq_class(2));
  r.hhat_upper = family_hhat(r.constants, static_cast<long>(phi), per_factor);
  r.a_box = box_ceil(r.hhat_upper, hhat_g_lower);
  r.b_box = r.a_box;
  return r;
}

RealUB bound_product_abelian(const EllipticCurveQ& E, long degC,
                             const RealUB& h2C, long degA, const RealUB& h2A,
                             int dimA, ProductCase c, long ambient_m) {
  if (dimA < 1) throw InvalidDimension("bound_product_abelian: dimA >= 1");
  if (degC < 1 || degA < 1)
    throw InvalidDimension("bound_product_abelian: degrees >= 1");
  ConstantTable t = table1(E, true);
  TheoremConstants tc = theorem_constants(E, true);
  RealUB C0 = bezout_c0(1, dimA, ambient_m);
  mpq_class dC(degC), dA(degA);
  switch (c) {
    case ProductCase::BRankZeroFactor:
      return (t.c1.scale(mpq_class(2) * dA) + h2A)
                 .scale(mpq_class(1 + dimA) * dC) +
             h2C.scale(dA) + C0.scale(dA * dC);
    case ProductCase::ARankOnePoint:
    case ProductCase::CRankOneRational: {
      RealUB part1 = h2A.scale(mpq_class(1 + dimA) * dC);
      RealUB part2 = (h2C + C0.scale(dC)).scale(dA);
      RealUB inner = (tc.C3 + t.c1.scale(mpq_class(2))).scale(dC) +
                     tc.C1 * h2C.scale(mpq_class(2) * dC * dC) +
                     tc.C2.scale(dC * dC * dC);
      RealUB part3 = inner.scale(mpq_class(1 + dimA) * dA);
      return part1 + part2 + part3;
    }
  }
  throw InvalidDimension("bound_product_abelian: unknown case");
}

long rank0_count_bound(long degA, long degC) { return 16 * degA * degC; }

DemjanenkoBounds demjanenko_bounds(const mpz_class& a, const mpz_class& b,
                                   const RealLB& hhat_P0, const RealUB& c3E) {
  Genus2Map map = genus2_to_E(a, b);  // throws DegenerateFamily
  require_positive_height(hhat_P0);
  ConstantTable t = table1(map.host, true);
  RealUB h2C = map.h2_image_upper();
  // hhat(P) <= 72.251 (12 h2C' + 144 (6.019 + 4 c1)) + 4 c2, and the sought
  // index satisfies min^2 <= hhat / (2 hhat(P0)).
  RealUB hhat = RealUB::decimal(kC1Literal) *
                    (h2C.scale(mpq_class(12)) +
                     (RealUB::decimal("6.019") + t.c1.scale(mpq_class(4)))
                         .scale(mpq_class(144))) +
                t.c2.scale(mpq_class(4));
  DemjanenkoBounds out;
  out.general =
      floor_of(sqrt_ub(hhat / hhat_P0.scale(mpq_class(2))));
  // Kulesz-style route: min^2 <= (12 h(b) + 22.946 + 3 c3) / hhat(P0).
  mpz_class ab = abs(b);
  RealUB hb = ab <= 1 ? RealUB::exact(0L) : log_ub(mpq_class(ab));
  RealUB knum = hb.scale(mpq_class(12)) + RealUB::decimal("22.946") +
                c3E.scale(mpq_class(3));
  out.kulesz = floor_of(sqrt_ub(knum / hhat_P0));
  return out;
}

}  // namespace mordell

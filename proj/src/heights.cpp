#include "mordell/heights.hpp"

#include <cassert>

namespace mordell {

RealUB weil_height(const mpq_class& q) {
  if (q == 0) return RealUB::exact(0L);
  mpz_class n = abs(q.get_num());
  mpz_class d = q.get_den();
  mpz_class m = n > d ? n : d;
  if (m <= 1) return RealUB::exact(0L);
  return log_ub(mpq_class(m));
}

RealUB h_infty(const mpq_class& q) {
  if (q == 0) return RealUB::exact(0L);
  mpq_class a = abs(q);
  if (a <= 1) return RealUB::exact(0L);
  return log_ub(a);
}

RealInterval h2_point(const EllipticCurveQ& E, const ECPoint& P) {
  if (P.infinity) return RealInterval::zero();
  if (!on_curve(E, P)) throw PointNotOnCurve("h2_point: point not on curve");
  mpz_class e = P.denominator_e();
  RealInterval finite = log_interval(mpq_class(e * e * e));
  mpq_class s = 1 + P.x * P.x + P.y * P.y;
  RealInterval arch = log_interval(s).scale(mpq_class(1, 2));
  return finite + arch;
}

RealUB h_weier(const EllipticCurveQ& E) {
  RealUB zero = RealUB::exact(0L);
  RealUB ha = mpz_cmp_ui(E.A.get_mpz_t(), 0) == 0
                  ? zero
                  : log_ub(mpq_class(abs(E.A))).scale(mpq_class(1, 2));
  RealUB hb = mpz_cmp_ui(E.B.get_mpz_t(), 0) == 0
                  ? zero
                  : log_ub(mpq_class(abs(E.B))).scale(mpq_class(1, 3));
  return max(zero, max(ha, hb));
}

HeightDiffConstants silverman_band(const EllipticCurveQ& E) {
  // c3 = h_W(Delta)/12 + h_inf(j)/12 + 1.07
  // c4 = h_W(j)/24 + h_W(Delta)/12 + h_inf(j)/12 + 0.973
  // c5 = h_Weier(E) + 6 log 2. The coefficient follows the computed
  // per-curve tables, which all realize this value; the displayed general
  // formula carries a factor 3 that those numbers do not use.
  RealUB hD = weil_height(mpq_class(E.discriminant));
  RealUB hij = h_infty(E.j_invariant);
  RealUB hj = weil_height(E.j_invariant);
  HeightDiffConstants out;
  out.c3 = hD.scale(mpq_class(1, 12)) + hij.scale(mpq_class(1, 12)) +
           RealUB::decimal("1.07");
  out.c4 = hj.scale(mpq_class(1, 24)) + hD.scale(mpq_class(1, 12)) +
           hij.scale(mpq_class(1, 12)) + RealUB::decimal("0.973");
  out.c5 = h_weier(E) + log2_const_ub().scale(mpq_class(6));
  return out;
}

namespace {

// x coordinate of [2]P from x alone: (x^4 - 2A x^2 - 8B x + A^2) /
// (4(x^3 + A x + B)), kept exactly in lowest terms.
mpq_class double_x(const EllipticCurveQ& E, const mpq_class& x) {
  mpq_class x2 = x * x;
  mpq_class num = x2 * x2 - 2 * E.A * x2 - 8 * E.B * x + E.A * E.A;
  mpq_class den = 4 * (x2 * x + E.A * x + E.B);
  mpq_class r = num / den;
  r.canonicalize();
  return r;
}

}  // namespace

RealInterval canonical_height(const EllipticCurveQ& E, const ECPoint& P,
                              const RealUB& eps) {
  if (P.infinity) throw PointNotOnCurve("canonical_height: point at infinity");
  if (!on_curve(E, P)) throw PointNotOnCurve("canonical_height: not on curve");
  HeightDiffConstants band = silverman_band(E);
  RealUB tail0 = max(band.c3, band.c4).scale(mpq_class(3));
  // minimal k with tail0 / 4^k <= eps
  int k = 0;
  RealUB tail = tail0;
  mpq_class quarter(1, 4);
  while (!(tail < eps) && !(mpfr_equal_p(tail.r.get(), eps.r.get()))) {
    tail = tail.scale(quarter);
    ++k;
    if (k > 24) throw GuardExceeded("canonical_height: doubling depth guard");
  }
  mpq_class x = P.x;
  for (int i = 0; i < k; ++i) {
    // [2^i]P may be torsion only if some doubling hits infinity (denominator
    // zero) -- the x-only recurrence would divide by zero there.
    mpq_class den = x * x * x + E.A * x + E.B;
    if (den == 0)
      throw PointNotOnCurve("canonical_height: torsion point (2-division)");
    x = double_x(E, x);
    if (mpz_sizeinbase(x.get_num().get_mpz_t(), 2) > (1u << 28))
      throw GuardExceeded("canonical_height: coordinate size guard");
  }
  RealUB hx_hi = weil_height(x);
  RealLB hx_lo = [&] {
    if (x == 0) return RealLB::exact(0L);
    mpz_class n = abs(x.get_num());
    mpz_class d = x.get_den();
    mpz_class m = n > d ? n : d;
    if (m <= 1) return RealLB::exact(0L);
    return log_lb(mpq_class(m));
  }();
  mpq_class scale(3, 2);
  mpz_class fourk = 1;
  fourk <<= 2 * k;
  mpq_class fac = scale / mpq_class(fourk);
  RealInterval est{hx_lo.scale(fac), hx_hi.scale(fac)};
  RealUB tailk = tail;  // 3 max(c3,c4)/4^k <= eps
  RealInterval out{est.lo - tailk, est.hi + tailk};
  return out;
}

}  // namespace mordell

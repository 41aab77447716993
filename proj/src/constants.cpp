#include "mordell/constants.hpp"

#include <stdexcept>

namespace mordell {

namespace {

// (signed rational) * log 2, rounded up.
RealUB qlog2_ub(const mpq_class& q) {
  RealUB out;
  Real l2;
  mpfr_const_log2(l2.mut(), sgn(q) >= 0 ? MPFR_RNDU : MPFR_RNDD);
  mpfr_mul_q(out.r.mut(), l2.get(), q.get_mpq_t(), MPFR_RNDU);
  return out;
}

}  // namespace

ConstantTable table1(const EllipticCurveQ& E, bool rational_points) {
  ConstantTable t;
  t.rational_points = rational_points;
  RealUB hA = weil_height(mpq_class(E.A));
  RealUB hB = weil_height(mpq_class(E.B));
  RealUB hD = weil_height(mpq_class(E.discriminant));
  RealUB hij = h_infty(E.j_invariant);
  RealUB hj = weil_height(E.j_invariant);
  RealUB hW = h_weier(E);
  t.hWE = hW;

  RealUB quarter_terms = (hD + hij).scale(mpq_class(1, 4));
  RealUB c1_gen = quarter_terms + hj.scale(mpq_class(1, 8)) +
                  (hA + hB).scale(mpq_class(1, 2)) + RealUB::decimal("3.724");
  RealUB c2_gen = quarter_terms + (hA + hB).scale(mpq_class(1, 2)) +
                  RealUB::decimal("4.015");
  HeightDiffConstants band = silverman_band(E);
  t.c3 = band.c3;
  t.c4 = band.c4;
  RealUB log5 = log_ub(mpq_class(5));
  RealUB log3 = log_ub(mpq_class(3));
  RealUB c6_gen = (hA + hB + log5).scale(mpq_class(1, 2));
  RealUB c7_gen = (hA + hB + log3).scale(mpq_class(1, 2));

  if (!rational_points) {
    t.c1 = c1_gen;
    t.c2 = c2_gen;
    t.c5 = c1_gen;
    t.c6 = c6_gen;
    t.c7 = c7_gen;
    return t;
  }

  mpz_class s = abs(E.A) + abs(E.B);
  RealUB logD = log_ub(mpq_class(abs(E.discriminant)));
  RealUB half_logS3 = log_ub(mpq_class(s + 3)).scale(mpq_class(1, 2));
  RealUB c1_q1 = (logD + hij).scale(mpq_class(1, 4)) +
                 hj.scale(mpq_class(1, 8)) + half_logS3 +
                 RealUB::decimal("2.919");
  RealUB c1_q2 = hW.scale(mpq_class(3)) + RealUB::decimal("4.709");
  t.c1 = min(c1_gen, min(c1_q1, c1_q2));
  RealUB c2_q1 = (logD + hij).scale(mpq_class(1, 4)) + half_logS3 +
                 RealUB::decimal("3.21");
  RealUB c2_q2 = hW.scale(mpq_class(3, 2)) + RealUB::decimal("2.427");
  t.c2 = min(c2_gen, min(c2_q1, c2_q2));
  t.c5 = band.c5;  // h_Weier + 6 log 2
  t.c6 = min(c6_gen, half_logS3);
  t.c7 = min(c7_gen, log_ub(mpq_class(s + 1)).scale(mpq_class(1, 2)));
  return t;
}

TheoremConstants theorem_constants(const EllipticCurveQ& E,
                                   bool rational_points) {
  ConstantTable t = table1(E, rational_points);
  return theorem_constants_override(t.c1, t.c2);
}

TheoremConstants theorem_constants_override(const RealUB& d1,
                                            const RealUB& d2) {
  TheoremConstants out;
  out.C1 = RealUB::decimal("72.251");
  out.C2 = out.C1 * (RealUB::decimal("6.019") + d1.scale(mpq_class(4)));
  out.C3 = d2.scale(mpq_class(4));
  return out;
}

RealUB bezout_c0(long d1, long d2, long m) {
  if (d1 < 0 || d2 < 0 || m < 1)
    throw std::invalid_argument("bezout_c0: d1,d2 >= 0 and m >= 1 required");
  mpq_class sum = 0;
  for (long i = 0; i <= d1; ++i)
    for (long j = 0; j <= d2; ++j) sum += mpq_class(1, 2 * (i + j + 1));
  mpq_class logfac(2 * m - d1 - d2, 2);
  return RealUB::of(sum) + qlog2_ub(logfac);
}

RealUB c0_of_N(int N) {
  if (N < 2) throw InvalidDimension("c0_of_N: N >= 2 required");
  mpz_class p3 = 1;
  for (int i = 0; i < N; ++i) p3 *= 3;
  mpq_class logfac(2 * p3 - 3, 2);  // 3^N - 3/2
  mpq_class harm = 0;
  for (int i = 1; i <= N - 1; ++i) harm += mpq_class(1, i);
  harm -= mpq_class(1, 2 * N);
  return qlog2_ub(logfac) + RealUB::of(harm);
}

}  // namespace mordell

#include "mordell/lower.hpp"

#include <algorithm>
#include <cmath>

#include "mordell/constants.hpp"
#include "mordell/numtheory.hpp"

namespace mordell {

bool kernel_membership(const EllipticCurveQ& E, const ECPoint& P,
                       const mpz_class& ell, const std::vector<mpz_class>& S) {
  (void)E;
  if (std::find(S.begin(), S.end(), ell) != S.end())
    throw HypothesisFailed("kernel_membership: prime lies in S");
  if (P.infinity) return true;
  return mpz_divisible_p(P.x.get_den().get_mpz_t(), ell.get_mpz_t());
}

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

mpz_class pow_z(std::uint64_t base, long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, static_cast<unsigned long>(exp));
  return r;
}

// Exact a_l: least a > 0 with [a]P0 in K_l modulo torsion, for a good prime
// not dividing den(x(P0)); this is the order of the reduction of P0 in the
// quotient by the reduced torsion.
std::uint64_t exact_a_ell(const EllipticCurveQ& E, const ECPoint& P0,
                          const std::vector<ECPoint>& torsion,
                          std::uint64_t ell) {
  CurveFp C = reduce_curve(E, ell);
  PointFp Pbar = reduce_point(E, P0, ell);
  if (torsion.size() == 1) return fp_point_order(C, Pbar);
  std::vector<PointFp> tbar;
  for (const ECPoint& t : torsion) tbar.push_back(reduce_point(E, t, ell));
  PointFp acc{};
  std::uint64_t order = fp_point_order(C, Pbar);
  for (std::uint64_t a = 1; a <= order; ++a) {
    acc = fp_add(C, acc, Pbar);
    for (const PointFp& t : tbar)
      if (acc == fp_neg(C, t)) return a;
  }
  return order;
}

}  // namespace

RealLB lambda_lower(const LowerBoundInput& in) {
  if (in.d1 <= in.d2)
    throw DegreeOrderViolation("lambda_lower: d1 > d2 required");
  const long e = 2 * ceil_div(in.d1, in.d2) - 2;
  const mpz_class floor_mult(in.m_integral + 1);
  std::vector<ECPoint> torsion = torsion_subgroup(in.E);
  auto in_S = [&](std::uint64_t ell) {
    return std::find(in.S.begin(), in.S.end(), mpz_class(ell)) != in.S.end();
  };
  mpz_class best = 0;
  for (std::uint64_t ell = 2;; ell = next_prime_u64(ell)) {
    if (ell > in.sharpen_cap) break;
    if (in_S(ell)) continue;
    mpz_class ell_pow = pow_z(ell, e);
    // every later prime contributes at least (m+1)^2 l^e, so stop once that
    // floor already exceeds the running minimum
    if (best != 0 && floor_mult * floor_mult * ell_pow >= best) break;
    mpz_class a;
    if (!in.P0.infinity &&
        mpz_divisible_ui_p(in.P0.x.get_den().get_mpz_t(), ell)) {
      a = 1;
    } else if (mpz_divisible_ui_p(in.E.discriminant.get_mpz_t(), ell)) {
      a = floor_mult;  // no smooth reduction available; use the floor
    } else {
      a = mpz_class(static_cast<unsigned long>(
          exact_a_ell(in.E, in.P0, torsion, ell)));
      if (a < floor_mult) a = floor_mult;
    }
    mpz_class contrib = a * a * ell_pow;
    if (best == 0 || contrib < best) best = contrib;
  }
  // floor for every prime beyond the cap
  mpz_class beyond =
      floor_mult * floor_mult * pow_z(next_prime_u64(in.sharpen_cap), e);
  if (best == 0 || beyond < best) best = beyond;
  return in.hhat_P0.scale(mpq_class(best));
}

RealLB lambda_trivial(const EllipticCurveQ& E, const ECPoint& P0,
                      const RealLB& hhat_P0, const mpz_class& ell, long d1,
                      long d2) {
  if (d1 <= d2) throw DegreeOrderViolation("lambda_trivial: d1 > d2 required");
  if (torsion_subgroup(E).size() != 1)
    throw HypothesisFailed("lambda_trivial: torsion must be trivial");
  if (P0.infinity ||
      !mpz_divisible_p(P0.x.get_den().get_mpz_t(), ell.get_mpz_t()))
    throw HypothesisFailed("lambda_trivial: P0 must be non-integral at ell");
  long e = 2 * ceil_div(d1, d2) - 2;
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), ell.get_mpz_t(), static_cast<unsigned long>(e));
  return hhat_P0.scale(mpq_class(p));
}

namespace {

// log of the conservative lower bound at family parameter k (d1 = 2k, d2 = 3)
// with the continuous exponent (4k/3 - 2) <= 2 ceil(2k/3) - 2.
double lambda_log(double log_hg, double log_ell, double mult_sq_log, long k) {
  return log_hg + mult_sq_log + (4.0 * k / 3.0 - 2.0) * log_ell;
}

}  // namespace

long crossover_n(const EllipticCurveQ& E, Family family, const ECPoint& g,
                 const RealLB& hhat_g, const CrossoverMode& mode) {
  if (mode.trivial) {
    if (g.infinity ||
        !mpz_divisible_p(g.x.get_den().get_mpz_t(), mode.ell.get_mpz_t()))
      throw HypothesisFailed("crossover_n: generator integral at the witness prime");
    if (torsion_subgroup(E).size() != 1)
      throw HypothesisFailed("crossover_n: torsion must be trivial");
  }
  ConstantTable t = table1(E, true);
  const double log2c = std::log(2.0);
  double log_ell = mode.trivial
                       ? std::log(mpq_class(mode.ell).get_d())
                       : log2c;  // least prime outside the (empty) excluded set
  double mult_sq_log =
      mode.trivial ? 0.0 : 2.0 * std::log(double(mode.m_integral + 1));
  double log_hg = std::log(hhat_g.value());
  const double F = 1300.518;
  double base = 2.0 * t.c6.value() + 3.01 + 2.0 * t.c1.value();
  double fourc2 = 4.0 * t.c2.value();

  if (family == Family::Cn) {
    double Q = F * base;
    long last = 0;
    for (long n = 1; n <= 20000; ++n) {
      double upper = std::log(Q * (2.0 * n + 3.0) * (2.0 * n + 3.0) + fourc2);
      if (lambda_log(log_hg, log_ell, mult_sq_log, n) <= upper) last = n;
    }
    return last + 1;
  }
  // Cyclotomic family: find the phi-threshold with the crude bound
  // 2^{omega2(n)} <= phi(n) = m, then translate back to n.
  long last_m = 0;
  for (long m = 1; m <= 20000; ++m) {
    double upper =
        std::log(F * (m * log2c + base) * (2.0 * m + 3.0) * (2.0 * m + 3.0) +
                 fourc2);
    if (lambda_log(log_hg, log_ell, mult_sq_log, m) <= upper) last_m = m;
  }
  long threshold = last_m + 1;
  long best_n = 1;
  for (long n = 1; n <= 4 * threshold * threshold + 1000; ++n) {
    auto [phi, o2, mu] = phi_omega2_mu(static_cast<unsigned long>(n));
    (void)o2;
    (void)mu;
    if (static_cast<long>(phi) <= threshold) best_n = n;
  }
  return best_n + 1;
}

}  // namespace mordell

#include "mordell/lattice.hpp"

#include <cmath>

namespace mordell {

LinearForm2 rank_one_form(const mpz_class& a, const mpz_class& b) {
  if (a == 0 && b == 0) throw ZeroVector("rank_one_form: (0,0)");
  return LinearForm2{a, b};
}

std::pair<mpz_class, mpz_class> short_vector(const LinearForm2& L, double kappa,
                                             double T) {
  if (!(T > 0)) throw PreconditionViolated("short_vector: T must be positive");
  // Both constraints compare exactly against dyadic rationals built from the
  // caller's doubles: ||u||^2 <= T^2 and |L(u)|^2 <= kappa^2 / T^2.
  mpq_class Tq(T), kq(kappa);
  mpq_class T2 = Tq * Tq;
  mpq_class strip = (kq * kq) / T2;
  long R = static_cast<long>(std::floor(T));
  bool found = false;
  mpz_class bu1, bu2, bnorm;
  mpq_class bval;
  for (long u1 = -R; u1 <= R; ++u1)
    for (long u2 = -R; u2 <= R; ++u2) {
      if (u1 == 0 && u2 == 0) continue;
      mpz_class n = mpz_class(u1) * u1 + mpz_class(u2) * u2;
      if (mpq_class(n) > T2) continue;
      mpq_class v = L.value_sq(u1, u2);
      if (v > strip) continue;
      bool better = !found;
      if (found) {
        if (n != bnorm)
          better = n < bnorm;
        else if (v != bval)
          better = v < bval;
        else
          better = (u1 < bu1) || (u1 == bu1 && u2 < bu2);
      }
      if (better) {
        found = true;
        bu1 = u1;
        bu2 = u2;
        bnorm = n;
        bval = v;
      }
    }
  if (found) return {bu1, bu2};
  double threshold = kappa / (std::sqrt(2.0) * std::pow(kappa - 1.0, 0.25));
  if (T < threshold)
    throw PreconditionViolated(
        "short_vector: no vector found and T below the existence threshold");
  throw Error("short_vector: existence guarantee violated (internal error)");
}

TranslateCertificate translate_certificate(
    const std::pair<mpz_class, mpz_class>& u, const EllipticCurveQ& E,
    const RealUB& hhat_uP) {
  if (u.first == 0 && u.second == 0)
    throw ZeroVector("translate_certificate: u = 0");
  ConstantTable t = table1(E, true);
  mpz_class norm = u.first * u.first + u.second * u.second;
  TranslateCertificate c;
  c.u = u;
  c.deg_bound = 3 * norm;
  c.h2_bound = hhat_uP.scale(mpq_class(6)) +
               t.c1.scale(mpq_class(12) * mpq_class(norm));
  return c;
}

ProofParameters proof_parameters(long degC, const RealUB& h2C,
                                 const EllipticCurveQ& E) {
  if (degC < 1) throw InvalidDimension("proof_parameters: degC >= 1");
  ConstantTable t = table1(E, true);
  ProofParameters p;
  p.c8 = RealUB::exact(6 * degC);
  p.c9 = h2C.scale(mpq_class(3)) +
         (t.c1.scale(mpq_class(4)) + RealUB::decimal("6.019"))
             .scale(mpq_class(3) * degC);
  p.c10 = t.c2.scale(mpq_class(2));
  double c8 = 6.0 * degC;
  double c9 = p.c9.value();
  double c10 = p.c10.value();
  p.kappa = 1.0 + 1.0 / (16.0 * c8 * c8);
  double k2 = p.kappa * p.kappa;
  p.T = c8 * k2 * (1.0 + std::sqrt(1.0 + c10 / (c8 * c9 * k2)));
  // hhat bound 4 c8 c9 kappa^2 + 2 c10, rounded up with an explicit kappa^2
  // upper bound (kappa <= 1 + 1/576 always).
  RealUB kappa2 = RealUB::exact(k2) + RealUB::decimal("1e-12");
  p.hhat_bound = (p.c8 * p.c9 * kappa2).scale(mpq_class(4)) +
                 p.c10.scale(mpq_class(2));
  return p;
}

}  // namespace mordell

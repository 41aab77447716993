#pragma once
// Two-dimensional geometry-of-numbers helpers: short vectors in a strip
// intersected with a disc, the normalized rank-one linear form, degree and
// height certificates for subgroup translates, and the kappa/T optimization.

#include <gmpxx.h>

#include <utility>

#include "mordell/constants.hpp"
#include "mordell/ec.hpp"
#include "mordell/real.hpp"

namespace mordell {

// (a X1 + b X2) / sqrt(a^2 + b^2), carried exactly as the pair (a, b).
struct LinearForm2 {
  mpz_class a, b;
  mpz_class norm_sq() const { return a * a + b * b; }
  // |L(t)|^2 as an exact rational.
  mpq_class value_sq(const mpz_class& t1, const mpz_class& t2) const {
    mpz_class s = a * t1 + b * t2;
    mpq_class v(s * s, norm_sq());
    v.canonicalize();
    return v;
  }
};

LinearForm2 rank_one_form(const mpz_class& a, const mpz_class& b);

// Nonzero integer u with ||u|| <= T and |L(u)| <= kappa ||L|| / T, chosen by
// smallest ||u||^2, then smallest |L(u)|, then lexicographic order.
std::pair<mpz_class, mpz_class> short_vector(const LinearForm2& L, double kappa,
                                             double T);

struct TranslateCertificate {
  std::pair<mpz_class, mpz_class> u;
  mpz_class deg_bound;  // 3 ||u||^2
  RealUB h2_bound;      // 6 hhat(u(P)) + 12 ||u||^2 c1(E)
};

TranslateCertificate translate_certificate(const std::pair<mpz_class, mpz_class>& u,
                                           const EllipticCurveQ& E,
                                           const RealUB& hhat_uP);

struct ProofParameters {
  double kappa;
  double T;
  RealUB c8, c9, c10;
  RealUB hhat_bound;  // 4 c8 c9 kappa^2 + 2 c10
};

ProofParameters proof_parameters(long degC, const RealUB& h2C,
                                 const EllipticCurveQ& E);

}  // namespace mordell

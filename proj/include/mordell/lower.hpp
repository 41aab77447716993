#pragma once
// l-adic lower bounds for the height of rational points whose coordinates are
// not integral, and the crossover index at which they beat the family upper
// bounds.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "mordell/ec.hpp"
#include "mordell/real.hpp"

namespace mordell {

struct LowerBoundInput {
  EllipticCurveQ E;
  ECPoint P0;                  // generator
  RealLB hhat_P0;              // certified lower bound for hhat(P0)
  std::vector<mpz_class> S;    // excluded primes
  long d1 = 0;                 // degree weight of the x-side form
  long d2 = 3;                 // degree weight of the y-side form
  long m_integral = 0;         // consecutive integral multiples of P0
  std::uint64_t sharpen_cap = 10000;  // exact a_l computed for l <= cap
};

// Is l | den(x(P)) (kernel of reduction on the given model)? l must be
// outside S.
bool kernel_membership(const EllipticCurveQ& E, const ECPoint& P,
                       const mpz_class& ell, const std::vector<mpz_class>& S);

// Certified lambda = hhat(P0) * min over l outside S of a_l^2 l^(2 ceil(d1/d2) - 2),
// with exact a_l below the cap and the (m_integral + 1) floor beyond it.
RealLB lambda_lower(const LowerBoundInput& in);

// hhat(P) >= l^(2 ceil(d1/d2) - 2) hhat(P0) when torsion is trivial and
// l | den(x(P0)).
RealLB lambda_trivial(const EllipticCurveQ& E, const ECPoint& P0,
                      const RealLB& hhat_P0, const mpz_class& ell, long d1,
                      long d2);

enum class Family { Cn, Dn };

struct CrossoverMode {
  bool trivial = false;  // trivial(l) vs general(m)
  mpz_class ell = 0;     // trivial: the witness prime
  long m_integral = 0;   // general: consecutive integral multiples
};

// Least n such that the lower bound exceeds the family upper bound for every
// n' >= n (for the cyclotomic family: via the phi-threshold argument with the
// crude 2^{omega2(n)} <= phi(n) bound).
long crossover_n(const EllipticCurveQ& E, Family family, const ECPoint& g,
                 const RealLB& hhat_g, const CrossoverMode& mode);

}  // namespace mordell

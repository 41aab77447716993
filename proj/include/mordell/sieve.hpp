#pragma once
// Prime sieve over candidate generator multiples, exact candidate
// verification, integral-point enumeration, and the full solve pipeline for
// the families and the genus-2 example.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mordell/bounds.hpp"
#include "mordell/ec.hpp"
#include "mordell/families.hpp"
#include "mordell/lower.hpp"

namespace mordell {

struct SieveConfig {
  int ntest = 25;          // consecutive no-change rounds before stopping
  std::uint64_t prime_start = 0;  // 0: first prime beyond the a-box
  int max_primes = 4000;   // guard on the number of sieving primes
  int parallel_width = 1;  // reserved; rounds are committed in prime order
};

enum class SieveStop { EmptyList, StableNtest, GuardExceededStop };

struct VerifiedPoint {
  long a = 0;             // first component is [a]g (and its negative)
  ECPoint first;          // the point [a]g
  ECPoint second;         // the point (x2, y2) with y2 = p(x1)
};

struct SieveOutcome {
  std::vector<long> survivors;
  std::vector<std::pair<std::uint64_t, size_t>> rounds;  // (prime, #left)
  SieveStop stop_reason = SieveStop::StableNtest;
  std::vector<VerifiedPoint> verified_points;
};

SieveOutcome sieve_a(const EllipticCurveQ& E, const ECPoint& g,
                     const IntPoly& p_poly, long a_box,
                     const SieveConfig& cfg);

// Exact check of one candidate multiplier: x1 = x([a]g), y2 = p(x1); find all
// rational x2 with x2^3 + A x2 + B = y2^2.
std::vector<VerifiedPoint> verify_candidate(const EllipticCurveQ& E,
                                            const ECPoint& g,
                                            const IntPoly& p_poly, long a,
                                            long guard = kScalarGuard);

// All S-integral points +-[k]P0 + T (T torsion), 1 <= k <= k_max.
std::vector<ECPoint> integral_multiples(const EllipticCurveQ& E,
                                        const ECPoint& P0,
                                        const std::vector<ECPoint>& torsion,
                                        long k_max,
                                        const std::vector<mpz_class>& S);

struct RationalPointsReport {
  std::string family_id;
  BoundReport bound;
  std::string lower_route;  // "trivial(l)" / "general(m)" / "none"
  double lambda = 0;        // certified lower bound at this n (0: unused)
  bool integral_path = false;
  SieveOutcome sieve;
  // final set: pairs (P1, P2); (O, O) is always present; sign symmetry in
  // the first component is expanded.
  std::vector<std::pair<ECPoint, ECPoint>> points;
  double elapsed_seconds = 0;
  SieveConfig config;
};

// Largest conveniently-found prime factor of e > 1 (trial division to 1e5
// plus a primality test on the stripped cofactor); 0 when none was found.
mpz_class witness_prime_factor(const mpz_class& e);

RationalPointsReport solve_family(const EllipticCurveQ& E, const ECPoint& g,
                                  const std::vector<ECPoint>& torsion,
                                  const FamilySpec& family,
                                  const RealLB& hhat_g,
                                  const SieveConfig& cfg = SieveConfig{});

// Genus-2 rational points: x-coordinates live over the host curve through
// the printed correspondence; returns the affine points plus the pair at
// infinity (flagged by infinity=true entries) on y^2 = a x^6 + b x^4 + b x^2 + a.
struct Genus2Point {
  bool at_infinity = false;
  int infinity_sign = 0;  // +1 / -1 branch at infinity
  mpq_class x, y;
  bool operator==(const Genus2Point& o) const {
    if (at_infinity || o.at_infinity)
      return at_infinity == o.at_infinity && infinity_sign == o.infinity_sign;
    return x == o.x && y == o.y;
  }
};

std::vector<Genus2Point> genus2_solve(const mpz_class& a, const mpz_class& b,
                                      long index_bound, const ECPoint& gen,
                                      const std::vector<ECPoint>& torsion);

}  // namespace mordell

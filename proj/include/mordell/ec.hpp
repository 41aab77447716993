#pragma once
// Exact elliptic-curve arithmetic over Q on short Weierstrass models
// y^2 = x^3 + A x + B with integer A, B, plus reduction mod small primes.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "mordell/errors.hpp"

namespace mordell {

struct EllipticCurveQ {
  mpz_class A, B;
  mpz_class discriminant;  // -16(4A^3 + 27B^2)
  mpq_class j_invariant;   // -1728 (4A)^3 / discriminant

  bool operator==(const EllipticCurveQ& o) const {
    return A == o.A && B == o.B;
  }
};

EllipticCurveQ curve_new(const mpz_class& A, const mpz_class& B);

struct ECPoint {
  bool infinity = true;
  mpq_class x, y;

  static ECPoint O() { return ECPoint{}; }
  static ECPoint affine(const mpq_class& x, const mpq_class& y) {
    ECPoint p;
    p.infinity = false;
    p.x = x;
    p.y = y;
    return p;
  }
  bool operator==(const ECPoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
  // e from the lowest-terms shape x = m/e^2, y = n/e^3 (1 for integral points)
  mpz_class denominator_e() const;
  bool is_integral() const { return infinity || x.get_den() == 1; }
};

bool on_curve(const EllipticCurveQ& E, const ECPoint& P);

ECPoint neg(const ECPoint& P);
ECPoint add(const EllipticCurveQ& E, const ECPoint& P, const ECPoint& Q);

inline constexpr long kScalarGuard = 5000;
ECPoint scalar_mul(const EllipticCurveQ& E, const mpz_class& n,
                   const ECPoint& P, long guard = kScalarGuard);

// Full torsion subgroup of E(Q); throws TorsionUncertified when the hybrid
// certification (Nagell-Lutz enumeration / reduction order bound) cannot
// close the gap (does not happen for integer models with moderate data).
std::vector<ECPoint> torsion_subgroup(const EllipticCurveQ& E);

struct CurveFp {
  std::uint64_t ell = 0, A = 0, B = 0;
};
struct PointFp {
  bool infinity = true;
  std::uint64_t x = 0, y = 0;
  bool operator==(const PointFp& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
};

CurveFp reduce_curve(const EllipticCurveQ& E, std::uint64_t ell);
PointFp reduce_point(const EllipticCurveQ& E, const ECPoint& P,
                     std::uint64_t ell);
PointFp fp_add(const CurveFp& C, const PointFp& P, const PointFp& Q);
PointFp fp_neg(const CurveFp& C, const PointFp& P);
PointFp fp_scalar_mul(const CurveFp& C, std::uint64_t n, const PointFp& P);

// v_ell(x/y) for points in the kernel of reduction (ell | e), 0 otherwise.
unsigned t_valuation(const ECPoint& P, const mpz_class& ell);

// Does X^3 + A X + B - c^2 have a root in F_ell (ell an odd prime)?
bool fp_has_cubic_root(std::uint64_t ell, std::uint64_t A, std::uint64_t B,
                       std::uint64_t c);

// Number of points of the reduced curve over F_ell (naive count; small ell).
std::uint64_t fp_curve_order(const CurveFp& C);
// Order of P in E(F_ell).
std::uint64_t fp_point_order(const CurveFp& C, const PointFp& P);

}  // namespace mordell

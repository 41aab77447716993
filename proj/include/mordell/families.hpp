#pragma once
// Curve families inside E x E cut out by y2 = p(x1) -- the power family
// (p = X^n), the cyclotomic family (p = Phi_n) -- plus the genus-2 sextic
// family of the appendix with its maps to an elliptic host curve.

#include <gmpxx.h>

#include <optional>
#include <string>

#include "mordell/constants.hpp"
#include "mordell/ec.hpp"
#include "mordell/numtheory.hpp"
#include "mordell/real.hpp"

namespace mordell {

enum class FamilyKind { Poly, PowerCn, CyclotomicDn, Genus2 };

struct FamilySpec {
  FamilyKind kind;
  EllipticCurveQ host;
  IntPoly p;       // Poly variant (also materialized for Cn / Dn)
  unsigned n = 0;  // Cn / Dn parameter
  mpz_class a, b;  // Genus2 variant

  static FamilySpec poly(const EllipticCurveQ& E, const IntPoly& p);
  static FamilySpec power(const EllipticCurveQ& E, unsigned n);      // n >= 1
  static FamilySpec cyclo(const EllipticCurveQ& E, unsigned n);      // n >= 1
  static FamilySpec genus2(const mpz_class& a, const mpz_class& b);
  std::string id() const;
};

struct FamilyInvariants {
  long degree = 0;
  RealUB h2_upper;
  std::optional<long> genus;
};

// degree 6 deg(p) + 9; h2 <= 6 (2 deg(p) + 3)(h_W(p) + log m + 2 c6(E)).
FamilyInvariants invariants_poly(const EllipticCurveQ& E, const IntPoly& p);

// degree 6 phi(n) + 9; h2 <= 6 (2 phi(n) + 3)(2^{omega2(n)} log 2 + 2 c6(E)).
FamilyInvariants invariants_Dn(const EllipticCurveQ& E, unsigned n);

// 4n + 2 when the lemma hypotheses hold (-3A and -3*disc nonsquares in Z and
// B(2A^3+B^2)(3A^3+8B^2) != 0); empty otherwise, with the failing reason.
struct GenusResult {
  std::optional<long> genus;
  std::string reason;
};
GenusResult genus_Cn(const EllipticCurveQ& E, unsigned n);

// The genus-2 sextic y^2 = a x^6 + b x^4 + b x^2 + a and its elliptic host.
struct Genus2Map {
  mpz_class a, b;
  // long Weierstrass form y^2 = x^3 + b x^2 + ab x + a^3
  mpz_class long_a2, long_a4, long_a6;
  EllipticCurveQ host;      // y^2 = x^3 + 27b(3a-b) x + 27(27a^3 - 9ab^2 + 2b^3)
  mpz_class relation;       // (x1 - 3b)(x2 - 3b) = 81 a^2 on the image curve
  long image_degree = 12;
  // embedding on the host model: x -> 9 a x^2 + 3b, y -> 27 a y
  ECPoint embed(const mpq_class& x, const mpq_class& y) const;
  RealUB h2_image_upper() const;  // printed bound on h2 of the image curve
};

Genus2Map genus2_to_E(const mpz_class& a, const mpz_class& b);

}  // namespace mordell

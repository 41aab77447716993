#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mordell/ec.hpp"
#include "mordell/errors.hpp"

using namespace mordell;

static EllipticCurveQ E1() { return curve_new(1, -1); }
static EllipticCurveQ E2() {
  return curve_new(mpz_class(-26811), mpz_class(-7320618));
}

TEST_CASE("model invariants") {
  auto E = E1();
  CHECK(E.discriminant == -496);
  CHECK(E.j_invariant == mpq_class(6912, 31));
  auto F = E2();
  CHECK(F.discriminant == mpz_class("-21918062700048384"));
  CHECK(F.j_invariant == mpq_class(mpz_class("-979146657"),
                                   mpz_class("10069019")));
  CHECK_THROWS_AS(curve_new(0, 0), SingularCurve);
  CHECK_THROWS_AS(curve_new(-3, 2), SingularCurve);  // 4*(-27)+27*4 = 0
}

TEST_CASE("group law basics") {
  auto E = E1();
  ECPoint g = ECPoint::affine(1, 1);
  CHECK(on_curve(E, g));
  CHECK_FALSE(on_curve(E, ECPoint::affine(1, 2)));
  CHECK(add(E, g, neg(g)).infinity);
  CHECK(add(E, g, ECPoint::O()) == g);

  ECPoint g2 = add(E, g, g);
  CHECK(g2.x == 2);
  CHECK(abs(g2.y) == 3);
  ECPoint g3 = add(E, g2, g);
  CHECK(g3.x == 13);
  CHECK(abs(g3.y) == 47);

  // associativity sample
  CHECK(add(E, add(E, g, g2), g3) == add(E, g, add(E, g2, g3)));

  CHECK_THROWS_AS(add(E, g, ECPoint::affine(5, 5)), PointNotOnCurve);
}

TEST_CASE("scalar multiples and denominators") {
  auto E = E1();
  ECPoint g = ECPoint::affine(1, 1);
  // x([k]g) denominators for k = 4..10
  const char* dens[] = {"36",        "121",       "2209",       "196249",
                        "197136",    "468073225", "39890874529"};
  ECPoint acc = scalar_mul(E, 3, g);
  for (int k = 4; k <= 10; ++k) {
    acc = add(E, acc, g);
    CHECK(acc.x.get_den() == mpz_class(dens[k - 4]));
    CHECK(acc == scalar_mul(E, k, g));
  }
  CHECK(scalar_mul(E, -2, g) == neg(add(E, g, g)));
  CHECK(scalar_mul(E, 0, g).infinity);
  CHECK_THROWS_AS(scalar_mul(E, 100000, g, 5000), GuardExceeded);
}

TEST_CASE("denominator shape and integrality") {
  auto E = E2();
  ECPoint g = ECPoint::affine(
      mpq_class(mpz_class("290083549425751"), mpz_class("23921262225")),
      mpq_class(mpz_class("4940195839487330160124"),
                mpz_class("3699782022029625")));
  CHECK(on_curve(E, g));
  CHECK(g.denominator_e() == 154665);  // 3^2 * 5 * 7 * 491
  CHECK_FALSE(g.is_integral());
  CHECK(ECPoint::affine(1, 1).is_integral());
}

TEST_CASE("torsion subgroups") {
  CHECK(torsion_subgroup(E1()).size() == 1);
  CHECK(torsion_subgroup(E2()).size() == 1);
  CHECK(torsion_subgroup(curve_new(mpz_class(-675243),
                                   mpz_class(-213578586))).size() == 1);
  // gcd of reduced orders stalls at 3 for this curve (rational 3-isogeny);
  // the division-polynomial stage must still certify trivial torsion
  CHECK(torsion_subgroup(curve_new(mpz_class("-2581990371"),
                                   mpz_class("-50433763600098"))).size() == 1);

  auto G = torsion_subgroup(curve_new(54, 540));
  REQUIRE(G.size() == 2);
  CHECK((G[0].infinity || G[1].infinity));
  for (const ECPoint& P : G)
    if (!P.infinity) {
      CHECK(P.x == -6);
      CHECK(P.y == 0);
    }
  auto H = torsion_subgroup(
      curve_new(mpz_class("-27081000"), mpz_class("54243000000")));
  REQUIRE(H.size() == 2);
  for (const ECPoint& P : H)
    if (!P.infinity) CHECK(P.x == 3000);

  // curves with larger torsion, small discriminant (full enumeration path):
  // y^2 = x^3 - x has full 2-torsion
  CHECK(torsion_subgroup(curve_new(-1, 0)).size() == 4);
  // y^2 = x^3 + 1 has a point of order 6
  CHECK(torsion_subgroup(curve_new(0, 1)).size() == 6);
}

TEST_CASE("reduction and finite-field arithmetic") {
  auto E = E1();
  CHECK_THROWS_AS(reduce_curve(E, 2), BadReductionPrime);   // 2 | 496
  CHECK_THROWS_AS(reduce_curve(E, 31), BadReductionPrime);  // 31 | 496
  CurveFp C = reduce_curve(E, 5);
  CHECK(fp_curve_order(C) == 9);
  CHECK(fp_curve_order(reduce_curve(E, 7)) == 11);

  ECPoint g = ECPoint::affine(1, 1);
  PointFp gb = reduce_point(E, g, 5);
  CHECK(gb.x == 1);
  CHECK(gb.y == 1);
  CHECK(fp_point_order(C, gb) == 9);
  CHECK(fp_scalar_mul(C, 9, gb).infinity);

  // reduction commutes with the group law
  for (int k = 1; k <= 8; ++k) {
    ECPoint kg = scalar_mul(E, k, g);
    PointFp expect = reduce_point(E, kg, 5);
    CHECK(fp_scalar_mul(C, static_cast<std::uint64_t>(k), gb) == expect);
  }
  CHECK(fp_add(C, gb, fp_neg(C, gb)).infinity);
}

TEST_CASE("kernel-of-reduction valuation") {
  auto E = E2();
  ECPoint g = ECPoint::affine(
      mpq_class(mpz_class("290083549425751"), mpz_class("23921262225")),
      mpq_class(mpz_class("4940195839487330160124"),
                mpz_class("3699782022029625")));
  CHECK(t_valuation(g, 3) == 2);
  CHECK(t_valuation(g, 491) == 1);
  CHECK(t_valuation(g, 11) == 0);
  // v_l(t([n]P)) = v_l(t(P)) + v_l(n)
  ECPoint g3 = scalar_mul(E, 3, g);
  CHECK(t_valuation(g3, 3) == 3);
  CHECK(t_valuation(g3, 491) == 1);
}

TEST_CASE("cubic root existence over F_ell") {
  // X^3 + 2 X + 3 - 1 has the root 1 mod every prime (1 + 2 + 3 - 4... )
  // use explicit instances on both code paths (scan below 64, gcd above)
  for (std::uint64_t ell : {5ull, 61ull, 67ull, 1009ull}) {
    // c^2 = p(1) = 6 mod ell: pick c with c^2 ≡ 6 if it exists, else just
    // assert consistency against brute force
    for (std::uint64_t c = 0; c < 12 && c < ell; ++c) {
      bool expect = false;
      for (std::uint64_t x = 0; x < ell; ++x) {
        std::uint64_t v = (x * x % ell * x + 2 * x + 3 + ell * ell -
                           c * c % ell * ell) % ell;
        std::uint64_t lhs = ((x * x % ell) * x + 2 * x + 3) % ell;
        (void)v;
        if (lhs == c * c % ell) expect = true;
      }
      CHECK(fp_has_cubic_root(ell, 2, 3, c) == expect);
    }
  }
}
